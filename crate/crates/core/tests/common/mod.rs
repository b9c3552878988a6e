#![allow(dead_code)]

use std::path::PathBuf;

use tileforce::forcing::staircase_square;
use tileforce::height::{extremal_heights, tiling_from_height};
use tileforce::lattice::{generate, Shape};
use tileforce::render::{render, Payloads, RenderSpec, Target};

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares `actual` with the stored file; `UPDATE_GOLDEN=1` rewrites it.
pub fn matches_golden(name: &str, actual: &str) -> bool {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    std::fs::read_to_string(&path).is_ok_and(|stored| stored == actual)
}

/// Square of side 6 with its staircase tiling, forcing tiles highlighted.
pub fn staircase_figure(target: Target) -> String {
    let s = staircase_square(3).unwrap();
    let spec = RenderSpec::new(target).with(|o| {
        o.tiling = true;
        o.forcing_set = true;
    });
    let p = Payloads {
        tiling: Some(&s.tiling),
        forcing_set: Some(&s.forcing_set),
        ..Default::default()
    };
    render(&s.region, &spec, &p).unwrap()
}

/// Minimal (`false`) or maximal (`true`) tiling of the hexagon with sides 3, 4, 6.
pub fn hexagon_figure(maximal: bool) -> String {
    let r = generate(Shape::Hexagon { a: 3, b: 4, c: 6 }).unwrap();
    let ex = extremal_heights(&r).unwrap();
    let t = tiling_from_height(&r, if maximal { &ex.hmax } else { &ex.hmin }).unwrap();
    let spec = RenderSpec::new(Target::Svg).with(|o| o.tiling = true);
    let p = Payloads {
        tiling: Some(&t),
        ..Default::default()
    };
    render(&r, &spec, &p).unwrap()
}
