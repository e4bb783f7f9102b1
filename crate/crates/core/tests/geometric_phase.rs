use std::f64::consts::{FRAC_PI_2, TAU};

use lightsim_core::geomphase::{
    pancharatnam_cycle_phase, poincare_path, poincare_point, qplate_k_path, small_circle,
    solid_angle, srp_phase, Helicity, SpherePath,
};
use lightsim_core::numeric::wrap_angle;
use lightsim_core::polarization::JonesVector;
use nalgebra::{Rotation3, Unit, Vector3};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_unit(rng: &mut ChaCha8Rng) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

fn random_rotation(rng: &mut ChaCha8Rng) -> Rotation3<f64> {
    let axis = Unit::new_normalize(random_unit(rng));
    Rotation3::from_axis_angle(&axis, rng.gen_range(-3.2..3.2))
}

/// Jones state whose Poincaré image is the unit vector `p`.
fn state_on_sphere(p: &Vector3<f64>, gauge: f64) -> JonesVector {
    let theta = p.z.clamp(-1.0, 1.0).acos();
    let phi = p.y.atan2(p.x);
    // circular basis: |L> sits on the +s3 pole
    let (half_s, half_c) = (0.5 * theta).sin_cos();
    let l = JonesVector::new(
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2),
    );
    let r = JonesVector::new(
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        Complex64::new(0.0, -std::f64::consts::FRAC_1_SQRT_2),
    );
    (l.scale(Complex64::new(half_c, 0.0)) + r.scale(Complex64::from_polar(half_s, phi)))
        .scale(Complex64::from_polar(1.0, gauge))
}

fn random_triangle(rng: &mut ChaCha8Rng) -> [Vector3<f64>; 3] {
    loop {
        let t = [random_unit(rng), random_unit(rng), random_unit(rng)];
        // keep edges well away from antipodal/coincident configurations
        let ok = (0..3).all(|i| {
            let d = t[i].dot(&t[(i + 1) % 3]);
            d > -0.95 && d < 0.999
        });
        if ok {
            return t;
        }
    }
}

#[test]
fn state_on_sphere_maps_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let p = random_unit(&mut rng);
        let s = state_on_sphere(&p, rng.gen_range(-3.0..3.0));
        assert!((poincare_point(&s).unwrap() - p).norm() < 1e-12);
    }
}

#[test]
fn solid_angle_invariant_under_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let cap = small_circle(0.9, 512).unwrap();
    let tri = SpherePath::closed_polygon(&random_triangle(&mut rng)).unwrap();
    let equator = small_circle(FRAC_PI_2, 256).unwrap();
    for path in [cap, tri, equator] {
        let base = solid_angle(&path).unwrap();
        for _ in 0..100 {
            let rotated = path.rotated(&random_rotation(&mut rng));
            assert!((solid_angle(&rotated).unwrap() - base).abs() < 1e-9);
        }
    }
}

#[test]
fn solid_angle_invariant_under_resampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let tri = SpherePath::closed_polygon(&random_triangle(&mut rng)).unwrap();
        let base = solid_angle(&tri).unwrap();
        for factor in [2, 5, 17] {
            assert!((solid_angle(&tri.densified(factor)).unwrap() - base).abs() < 1e-6);
        }
    }
    let eq = qplate_k_path(1.0, 1.0).unwrap();
    assert!((solid_angle(&eq.densified(4)).unwrap() - TAU).abs() < 1e-6);
}

#[test]
fn reversal_flips_sign() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let tri = SpherePath::closed_polygon(&random_triangle(&mut rng)).unwrap();
        let a = solid_angle(&tri).unwrap();
        let b = solid_angle(&tri.reversed()).unwrap();
        assert!((a + b).abs() < 1e-9);
    }
    let cap = small_circle(1.2, 300).unwrap();
    assert!((solid_angle(&cap).unwrap() + solid_angle(&cap.reversed()).unwrap()).abs() < 1e-9);
}

#[test]
fn half_angle_law_on_random_geodesic_triangles() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let tri = random_triangle(&mut rng);
        let states: Vec<JonesVector> = tri
            .iter()
            .chain(std::iter::once(&tri[0]))
            .map(|p| state_on_sphere(p, rng.gen_range(-3.0..3.0)))
            .collect();
        let omega = solid_angle(&poincare_path(&states).unwrap()).unwrap();
        let phase = pancharatnam_cycle_phase(&states).unwrap();
        assert!(wrap_angle(phase + omega / 2.0).abs() < 1e-6);
    }
}

#[test]
fn pancharatnam_additivity_on_random_quadrilaterals() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let pts = [
            random_unit(&mut rng),
            random_unit(&mut rng),
            random_unit(&mut rng),
            random_unit(&mut rng),
        ];
        let s: Vec<JonesVector> = pts.iter().map(|p| state_on_sphere(p, 0.0)).collect();
        let ok = (0..4).all(|i| s[i].inner(&s[(i + 1) % 4]).norm() > 1e-3)
            && s[0].inner(&s[2]).norm() > 1e-3;
        if !ok {
            continue;
        }
        let a = pancharatnam_cycle_phase(&[s[0], s[1], s[2], s[0]]).unwrap();
        let b = pancharatnam_cycle_phase(&[s[0], s[2], s[3], s[0]]).unwrap();
        let whole = pancharatnam_cycle_phase(&[s[0], s[1], s[2], s[3], s[0]]).unwrap();
        assert!(wrap_angle(whole - a - b).abs() < 1e-9);
    }
}

proptest! {
    #[test]
    fn srp_helicities_cancel_exactly(theta in 0.05..3.0f64, count in 8usize..400) {
        let path = small_circle(theta, count).unwrap();
        let plus = srp_phase(&path, Helicity::Positive).unwrap();
        let minus = srp_phase(&path, Helicity::Negative).unwrap();
        prop_assert_eq!(plus + minus, 0.0);
    }

    #[test]
    fn qplate_path_solid_angle_scales_with_winding(w in 1i32..4, sign in prop::bool::ANY) {
        let q = if sign { w as f64 } else { -(w as f64) };
        let path = qplate_k_path(q, 1.0).unwrap();
        let omega = solid_angle(&path).unwrap();
        prop_assert!((omega - TAU * w as f64).abs() < 1e-6);
    }
}
