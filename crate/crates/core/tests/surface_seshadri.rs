mod common;

use okounkov_core::geometry::{int, rat, volume};
use okounkov_core::seshadri::{certify, xi_simplex_fit, BodyFamily};
use okounkov_core::surface::{surface_body, zariski, PicardClass, SurfaceSpec};

#[test]
fn delpezzo_xi_matches_curve_oracle() {
    let expected = [rat(1, 1), rat(1, 2), rat(1, 2), rat(1, 2), rat(2, 5), rat(2, 5), rat(3, 8), rat(6, 17)];
    for n in 1..=8 {
        let spec = SurfaceSpec::delpezzo(n).unwrap();
        let h = PicardClass::hyperplane(n);
        let fam = BodyFamily::from_surface(&spec, &h).unwrap();
        let xi = xi_simplex_fit(&fam).unwrap().xi;
        let oracle = common::curve_ratio_oracle(n, 6);
        assert_eq!(xi, oracle, "N = {n}");
        assert_eq!(xi, expected[n - 1], "N = {n}");
        assert!(certify(&fam, &xi));
    }
}

#[test]
fn delpezzo_areas_sum_to_volume() {
    for n in 1..=8 {
        let spec = SurfaceSpec::delpezzo(n).unwrap();
        let h = PicardClass::hyperplane(n);
        let mut total = int(0);
        for j in 0..n {
            let b = surface_body(&spec, &h, j).unwrap();
            let area = b.area().unwrap();
            assert_eq!(area, volume(b.body_blowup_coords.as_ref().unwrap()));
            assert_eq!(area, volume(b.body_deglex_coords.as_ref().unwrap()));
            total += area;
        }
        assert_eq!(int(2) * total, zariski(&spec, &h).unwrap().volume, "N = {n}");
    }
}
