use std::process::Command;

use ssplat_cli::run;

fn ssplat(args: &str) -> (i32, String) {
    let argv = std::iter::once("ssplat").chain(args.split_whitespace());
    run(argv)
}

fn corpus(name: &str) -> String {
    format!("{}/../core/corpus/{name}.lat", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn documented_examples() {
    assert_eq!(
        ssplat("ssp --strategy auto fig1"),
        (0, "CertifiedSSP (BruteForce), families=512\n".into())
    );
    assert_eq!(
        ssplat("ssp chain:2"),
        (1, "Violated, witness {1,2}, |F|=2, |Str|=1\n".into())
    );
    assert_eq!(ssplat("mobius fig2 --pair 0 top"), (0, "0\n".into()));
    assert_eq!(
        ssplat("ssp fig2"),
        (0, "CertifiedSSP (RcMuVanishingOnce)\n".into())
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ssplat");
    let out = Command::new(bin).args(["ssp", "chain:2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "Violated, witness {1,2}, |F|=2, |Str|=1\n"
    );
    let out = Command::new(bin).args(["rc", "fig1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = Command::new(bin)
        .args(["ssp", "boolean:3", "--jobs", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn emit_round_trips_through_files() {
    let (code, text) = ssplat(&format!("build {} --emit", corpus("fig3b")));
    assert_eq!(code, 0);
    let dir = std::env::temp_dir().join(format!("ssplat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("copy.lat");
    std::fs::write(&path, &text).unwrap();
    let (code, again) = ssplat(&format!("build {} --emit", path.display()));
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, 0);
    assert_eq!(again, text);
    let (_, built) = ssplat("build fig3b --emit");
    assert_eq!(built, text);
}

#[test]
fn parse_errors_cite_lines() {
    let dir = std::env::temp_dir().join(format!("ssplat-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.lat");
    std::fs::write(&path, "elem a\nelem b\ncover a c\n").unwrap();
    let (code, text) = ssplat(&format!("build {}", path.display()));
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, 2);
    assert!(text.contains("line 3"), "{text}");
}

#[test]
fn verbs() {
    assert_eq!(
        ssplat("build subspace:2:3"),
        (
            0,
            "elements=16 covers=35 lattice=yes ranked=yes\nrank profile 1,7,7,1\n".into()
        )
    );
    assert_eq!(
        ssplat("rc fig3b"),
        (1, "not RC: interval 4 < 45 < [5]\n".into())
    );
    assert_eq!(
        ssplat("mobius fig1"),
        (0, "vanishing pairs: (0,1234)\n".into())
    );
    assert_eq!(
        ssplat("mobius boolean:4 --pair bottom top"),
        (0, "1\n".into())
    );
    assert_eq!(
        ssplat("shatter chain:2 --family 1,2"),
        (0, "Str = {0}, |F|=2, |Str|=1\n".into())
    );
    assert_eq!(
        ssplat("vc fig3b --family 1,2,3,12,13,23"),
        (0, "VC = 2\n".into())
    );
    assert_eq!(
        ssplat("ssp fig1 --family 1,2,3,4"),
        (0, "holds, |F|=4, |Str|=5\n".into())
    );
    assert_eq!(ssplat("ssp chain:2 --strategy certificate").0, 1);
    assert_eq!(
        ssplat("ssp fig2 --strategy brute --budget 1000"),
        (1, "Inconclusive, families=0\n".into())
    );
    assert_eq!(
        ssplat("antichain boolean:2 --antichain 1,2 --family ∅"),
        (0, "|F|=1, |F_A|=1, F_A = {∅}, bound holds\n".into())
    );
    assert_eq!(ssplat("ssp boolean:1*chain:2").0, 1);
}

#[test]
fn usage_errors() {
    assert_eq!(ssplat("ssp nosuch").0, 2);
    assert_eq!(ssplat("ssp boolean:x").0, 2);
    assert_eq!(ssplat("ssp subspace:4:2").0, 2);
    assert_eq!(ssplat("shatter fig1 --family 1,99").0, 2);
    assert_eq!(ssplat("ssp fig1 --strategy fast").0, 2);
    assert_eq!(ssplat("vc fig1 --family 1").0, 2);
    assert_eq!(ssplat("").0, 2);
}

#[test]
fn scan_formats() {
    let (code, tsv) = ssplat("scan --n-max 5 --format tsv");
    assert_eq!(code, 0);
    assert_eq!(
        tsv,
        "n\ttotal\trc\tssp\tinconclusive\tcounterexamples\n1\t1\t1\t1\t0\t0\n2\t1\t1\t1\t0\t0\n3\t1\t0\t0\t0\t0\n4\t2\t1\t1\t0\t0\n5\t5\t1\t1\t0\t0\n"
    );
    let (code, text) = ssplat("scan --n-max 3");
    assert_eq!(code, 0);
    assert!(
        text.starts_with("n=1 total=1 rc=1 ssp=1 agreements=1 inconclusive=0 counterexamples=0\n")
    );
    // deterministic across worker counts
    assert_eq!(
        ssplat("--jobs 1 scan --n-max 6"),
        ssplat("--jobs 4 scan --n-max 6")
    );
}

#[test]
fn dot_export() {
    let (code, dot) = ssplat("export-dot boolean:2");
    assert_eq!(code, 0);
    assert_eq!(dot.matches("[label=").count(), 4);
    assert_eq!(dot.matches(" -- ").count(), 4);
    let (_, fig1) = ssplat("export-dot fig1");
    assert_eq!(fig1.matches(" -- ").count(), 14);
    assert_eq!(ssplat("export-dot fig1"), ssplat("export-dot fig1"));
}
