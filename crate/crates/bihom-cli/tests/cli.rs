use std::path::{Path, PathBuf};

use bihom::algebra::{example_family, Family};
use bihom::{Field, Scalar};
use bihom_cli::fixtures::standard_fixtures;
use bihom_cli::{parse_structure, run, serialize_structure, Outcome, Structure};
use proptest::prelude::*;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn bihom(args: &[&str]) -> Outcome {
    run(std::iter::once("bihom").chain(args.iter().copied()))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bihom-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn shipped_fixtures_are_current() {
    for (name, s) in standard_fixtures().unwrap() {
        let on_disk = std::fs::read_to_string(fixture(name)).unwrap_or_default();
        assert_eq!(
            on_disk,
            serialize_structure(&s),
            "{name} is stale; regenerate with `cargo run -p bihom-cli --example write_fixtures`"
        );
    }
}

#[test]
fn check_family_fixture() {
    let out = bihom(&["check", &fixture("family1.json")]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("PASS"));
}

#[test]
fn smash_then_check_round_trip() {
    let out_path = scratch("smash.json");
    let out = bihom(&[
        "smash",
        &fixture("kc4_bialg.json"),
        &fixture("kc4_selfmod.json"),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    let written = std::fs::read_to_string(&out_path).unwrap();
    assert!(matches!(parse_structure(&written).unwrap(), Structure::Algebra(a) if a.dim() == 16));
    let out = bihom(&["check", out_path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
}

#[test]
fn quantum_demo_passes() {
    let out = bihom(&[
        "demo",
        "uqsl2",
        "--grid",
        "2",
        "--lambda1",
        "2",
        "--lambda2",
        "3",
        "--xi",
        "1/2",
    ]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert!(!out.stdout.contains("FAIL"));
}

#[test]
fn antipode_and_relative_checks() {
    let out = bihom(&["antipode", "solve", &fixture("sweedler_monoidal.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let out = bihom(&[
        "antipode",
        "verify",
        &fixture("sweedler_monoidal.json"),
        &fixture("sweedler_antipode.json"),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let over = [
        ("kc4_selfmod.json", "kc4_bialg.json"),
        ("kc2_pseudotwistor.json", "kc2.json"),
    ];
    for (file, base) in over {
        let out = bihom(&["check", &fixture(file), "--over", &fixture(base)]);
        assert_eq!(out.code, 0, "{file}: {}{}", out.stdout, out.stderr);
    }
    let out = bihom(&[
        "ttp",
        &fixture("kc2.json"),
        &fixture("kc2.json"),
        &fixture("flip_kc2.json"),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
}

#[test]
fn exit_codes() {
    // A corrupted entry of alpha is a check failure, not an input error.
    let broken = scratch("broken.json");
    let mut text = std::fs::read_to_string(fixture("family1.json")).unwrap();
    text = text.replacen("\"6\"", "\"7\"", 1);
    std::fs::write(&broken, text).unwrap();
    let out = bihom(&["check", broken.to_str().unwrap()]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert!(out.stdout.contains("FAIL"));

    let out = bihom(&["check", "/nonexistent/file.json"]);
    assert_eq!(out.code, 2);
    let out = bihom(&["--field", "Fp:2", "check", &fixture("family1.json")]);
    assert_eq!(out.code, 2);
    let out = bihom(&["check", &fixture("kc2_sign.json")]);
    assert_eq!(out.code, 2);
    let out = bihom(&["no-such-command"]);
    assert_eq!(out.code, 2);
    let out = bihom(&["--help"]);
    assert_eq!(out.code, 0);
}

fn small_ratio() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..=20, 1i64..=9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn family_files_round_trip((an, ad) in small_ratio(), (bn, bd) in small_ratio()) {
        let q = Field::Rational;
        let a = Scalar::ratio(q, an, ad).unwrap();
        let b = Scalar::ratio(q, bn, bd).unwrap();
        prop_assume!(!b.is_one());
        let s = Structure::Algebra(example_family(Family::First, &a, &b).unwrap());
        let text = serialize_structure(&s);
        let back = parse_structure(&text).unwrap();
        prop_assert_eq!(serialize_structure(&back), text);
        prop_assert_eq!(back, s);
    }
}
