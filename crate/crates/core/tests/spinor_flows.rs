use mfc_core::hypnum::HyperbolicNumber as H;
use mfc_core::ode::{linspace, CurvaturePayload, OdeKind};
use mfc_core::spinor_ode::{propagate_spinor, reconstruct_frames, rhs};
use mfc_core::{Error, HSpinor};
use proptest::prelude::*;

fn payload(kind: OdeKind, x: f64, y: f64, z: f64) -> CurvaturePayload {
    match kind {
        OdeKind::SpacelikeGeneral | OdeKind::TimelikeGeneral => CurvaturePayload::General { l1: x, l2: y, l3: z },
        OdeKind::SpacelikeAdaptedBishop | OdeKind::TimelikeAdaptedBishop => CurvaturePayload::Bishop { l2b: y, l3b: z },
        _ => CurvaturePayload::Frenet { p: y, q: x },
    }
}

fn smooth(k: [f64; 3]) -> impl Fn(OdeKind, f64) -> CurvaturePayload {
    move |kind, s| payload(kind, k[0] + (2.0 * s).sin(), k[1] * (1.0 + s * s), k[2] * (3.0 * s).cos())
}

fn start() -> HSpinor {
    HSpinor::new(H::new(0.9, 0.3), H::new(-0.4, 0.2)).normalized().unwrap()
}

#[test]
fn norm_is_conserved_along_every_flow() {
    let grid = linspace(0.0, 1.0, 1001);
    let curv = smooth([0.3, -0.8, 0.6]);
    for kind in OdeKind::ALL {
        let out = propagate_spinor(kind, |s| Ok(curv(kind, s)), &start(), &grid).unwrap();
        let worst = out.iter().map(|x| x.norm_defect).fold(0.0, f64::max);
        assert!(worst <= 1e-8, "{}: {worst:e}", kind.name());
    }
}

#[test]
fn sign_flip_gives_identical_frames() {
    let grid = linspace(0.0, 1.0, 201);
    let curv = smooth([0.3, -0.8, 0.6]);
    for kind in OdeKind::ALL {
        let c = kind.character();
        let a = propagate_spinor(kind, |s| Ok(curv(kind, s)), &start(), &grid).unwrap();
        let b = propagate_spinor(kind, |s| Ok(curv(kind, s)), &-start(), &grid).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.spinor, -y.spinor);
        }
        assert_eq!(reconstruct_frames(&a, c).unwrap(), reconstruct_frames(&b, c).unwrap());
    }
}

/// Observed order of the central-difference derivative against `rhs`.
#[test]
fn central_differences_converge_at_second_order() {
    let curv = smooth([0.3, -0.8, 0.6]);
    for kind in OdeKind::ALL {
        let s_mid = 0.5;
        let err = |h: f64| -> f64 {
            // Fine substeps keep integration error far below the stencil error.
            let fine = linspace(s_mid - h, s_mid + h, 201);
            let out = propagate_spinor(kind, |s| Ok(curv(kind, s)), &start(), &fine).unwrap();
            let (a, m, b) = (out[0].spinor, out[100].spinor, out[200].spinor);
            let fd = (b - a) * (0.5 / h);
            fd.dist(&rhs(kind, &curv(kind, s_mid), &m).unwrap())
        };
        let (e1, e2) = (err(1e-3), err(5e-4));
        let order = (e1 / e2).log2();
        assert!(order >= 1.9, "{}: {e1:e} {e2:e} order {order}", kind.name());
    }
}

/// Real 4x4 matrix of `φ ↦ rhs(φ)` for constant curvatures.
fn linear_map(kind: OdeKind, curv: &CurvaturePayload) -> [[f64; 4]; 4] {
    let mut m = [[0.0; 4]; 4];
    for c in 0..4 {
        let mut e = [0.0; 4];
        e[c] = 1.0;
        let col = rhs(kind, curv, &HSpinor::from_array(e)).unwrap().to_array();
        for r in 0..4 {
            m[r][c] = col[r];
        }
    }
    m
}

fn expm_apply(m: &[[f64; 4]; 4], t: f64, x: [f64; 4]) -> [f64; 4] {
    let mut term = x;
    let mut acc = x;
    for k in 1..60 {
        let mut next = [0.0; 4];
        for r in 0..4 {
            for c in 0..4 {
                next[r] += m[r][c] * term[c] * t / k as f64;
            }
        }
        term = next;
        for r in 0..4 {
            acc[r] += term[r];
        }
    }
    acc
}

#[test]
fn constant_timelike_frenet_flow_matches_exponential() {
    let curv = CurvaturePayload::Frenet {
        p: 2.0 / 3f64.sqrt(),
        q: 1.0 / 3f64.sqrt(),
    };
    let kind = OdeKind::TimelikeAdaptedFrenet;
    let init = HSpinor::new(H::ONE, H::ZERO);
    let grid = linspace(0.0, 1.0, 1001);
    let out = propagate_spinor(kind, |_| Ok(curv), &init, &grid).unwrap();
    let m = linear_map(kind, &curv);
    for x in out.iter().step_by(100) {
        let want = HSpinor::from_array(expm_apply(&m, x.s, init.to_array()));
        assert!(x.spinor.dist(&want) <= 1e-9, "s = {}: {:e}", x.s, x.spinor.dist(&want));
    }
}

#[test]
fn spacelike_general_norm_defect_small_at_end() {
    let grid = linspace(0.0, 1.0, 1001);
    let kind = OdeKind::SpacelikeGeneral;
    let curv = smooth([1.1, 0.7, -0.9]);
    let out = propagate_spinor(kind, |s| Ok(curv(kind, s)), &start(), &grid).unwrap();
    assert!(out.last().unwrap().norm_defect <= 1e-8);
}

#[test]
fn curvature_errors_stop_the_flow() {
    let grid = linspace(0.0, 1.0, 11);
    let r = propagate_spinor(
        OdeKind::SpacelikeGeneral,
        |s| {
            if s > 0.5 {
                Err(Error::ZeroCurvature)
            } else {
                Ok(CurvaturePayload::General { l1: 0.0, l2: 0.0, l3: 0.0 })
            }
        },
        &start(),
        &grid,
    );
    assert_eq!(r, Err(Error::ZeroCurvature));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rhs_is_real_linear(x in prop::array::uniform4(-2.0f64..2.0), y in prop::array::uniform4(-2.0f64..2.0),
                          k in prop::array::uniform3(-2.0f64..2.0), a in -2.0f64..2.0) {
        let (x, y) = (HSpinor::from_array(x), HSpinor::from_array(y));
        for kind in OdeKind::ALL {
            let c = payload(kind, k[0], k[1], k[2]);
            let lhs = rhs(kind, &c, &(x * a + y)).unwrap();
            let rhs_ = rhs(kind, &c, &x).unwrap() * a + rhs(kind, &c, &y).unwrap();
            prop_assert!(lhs.dist(&rhs_) <= 1e-12);
        }
    }

    #[test]
    fn rhs_is_tangent_to_the_norm_sphere(x in prop::array::uniform4(-2.0f64..2.0), k in prop::array::uniform3(-2.0f64..2.0)) {
        let phi = HSpinor::from_array(x);
        for kind in OdeKind::ALL {
            let d = rhs(kind, &payload(kind, k[0], k[1], k[2]), &phi).unwrap();
            // d/ds (φ̄ᵗφ) = 2 Re(φ̄ᵗφ′)
            let rate = phi.c1.conj() * d.c1 + phi.c2.conj() * d.c2;
            prop_assert!(rate.a.abs() <= 1e-11);
        }
    }
}
