use std::fs;
use std::path::Path;

use mfc_core::catalog;
use mfc_core::ode::linspace;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::{num, write_bytes, write_csv};
use crate::{eval, verify};

/// Writes `<name>.json`, `<name>_eval.csv`, `<name>_verify.txt` and
/// `<name>_plot.csv` into `dir`. Returns the verify outcome.
pub fn run(name: &str, dir: &Path) -> Result<Option<String>, CliError> {
    let entry = catalog::lookup(name)?;
    let cfg = RunConfig::from_entry(&entry);
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;

    let mut json = serde_json::to_string_pretty(&cfg).map_err(|e| CliError::Config(e.to_string()))?;
    json.push('\n');
    write_bytes(Some(&dir.join(format!("{name}.json"))), json.as_bytes())?;

    let rows = eval::run(&cfg)?;
    write_csv(Some(&dir.join(format!("{name}_eval.csv"))), &eval::HEADER, &rows)?;

    let report = verify::run(&cfg)?;
    write_bytes(
        Some(&dir.join(format!("{name}_verify.txt"))),
        report.render(cfg.tol).as_bytes(),
    )?;

    let spec = cfg.spec()?;
    let plot = linspace(cfg.s_min, cfg.s_max, cfg.samples)
        .into_iter()
        .map(|s| {
            let f = spec.frame_at(s)?;
            Ok(std::iter::once(s).chain(f.gamma.0).map(num).collect())
        })
        .collect::<Result<Vec<Vec<String>>, mfc_core::Error>>()?;
    write_csv(Some(&dir.join(format!("{name}_plot.csv"))), &["s", "g1", "g2", "g3"], &plot)?;

    Ok(report.first_failure(cfg.tol).map(str::to_string))
}
