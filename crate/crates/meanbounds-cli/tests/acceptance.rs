//! Release gate for the CSV grid export: the default sweep must
//! reproduce the committed golden file byte for byte, and its pinned
//! rows must match the region definitions worked out by hand.

use std::path::Path;
use std::process::Command;

#[test]
fn criterion_10_default_grid_matches_the_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_meanbounds"))
        .args(["sweep", "--output", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let produced = std::fs::read(&path).unwrap();
    let golden =
        std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/sweep_default.csv"))
            .unwrap();
    assert_eq!(
        produced, golden,
        "default sweep drifted from the golden file"
    );

    let text = String::from_utf8(produced).unwrap();
    assert!(!text.contains('\r'), "LF line endings only");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2602, "header plus 51 x 51 data rows");
    assert_eq!(lines[0], "r,q,class_g,class_f");

    // hand checks against the region definitions:
    // (0.5, 1) is the first constant point of the slope quotient; the gap
    // ratio map makes no claim there
    assert!(lines.contains(&"0.5,1,const,unknown"));
    // (2, 2) is the second constant point
    assert!(lines.contains(&"2,2,const,unknown"));
    // at (2.5, 2): r > 1 and q = 2 <= min(2, 2(r+1)/3) = 2, decreasing
    // for both kernels
    assert!(lines.contains(&"2.5,2,dec,dec"));
    // r = 0 is an excluded line
    assert!(lines.contains(&"0,1,excluded,excluded"));
    // r = 1 and q = 0 likewise
    assert!(lines.contains(&"1,1.5,excluded,excluded"));
    assert!(lines.contains(&"-1.5,0,excluded,excluded"));
    // at (-1, 0.6): r < 0 and q = 0.6 >= max(0, 2(r+1)/3) = 0, increasing
    assert!(lines.contains(&"-1,0.6,inc,inc"));
    // at (0.3, 0.4): 0 < r < 1 and q = 0.4 <= min(2r, 2(r+1)/3) = 0.6,
    // increasing
    assert!(lines.contains(&"0.3,0.4,inc,inc"));
    // at (0.3, 2): q = 2 >= max(2r, 2(r+1)/3) = 0.8666..., decreasing
    assert!(lines.contains(&"0.3,2,dec,dec"));
    // at (1.1, 2.1): r > 1 and q = 2.1 >= max(2, 2(r+1)/3) = 2, increasing
    assert!(lines.contains(&"1.1,2.1,inc,inc"));
    // at (-0.4, 0.3): q sits strictly between min(0, 0.4) = 0 and
    // max(0, 0.4) = 0.4: neither, and unknown for the gap ratio
    assert!(lines.contains(&"-0.4,0.3,neither,unknown"));

    println!("criterion 10: default 51x51 sweep equals the golden file, spot rows verified: PASS");
}
