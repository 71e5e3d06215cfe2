use std::process::Command;

use tiltrep::cli::{run, Outcome};
use tiltrep::closedform::dn_rank2;
use tiltrep::export::{from_json, to_json};
use tiltrep::Field;

fn tiltrep(args: &str) -> Outcome {
    run(std::iter::once("tiltrep").chain(args.split_whitespace()))
}

#[test]
fn build_prints_every_matrix() {
    let out = tiltrep("build dn-rank2 --n 5 --i 1 --j 2 --m 1 --format text");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out
        .stdout
        .starts_with("algebra D~5 over q\ndims 1:2 2:2 3:4 4:3 5:1 6:1\n"));
    for label in ["3->1", "3->2", "4->3", "5->4", "6->4"] {
        assert!(out.stdout.contains(&format!("\n{label} : ")), "{label}");
    }
    // entries are right-aligned to a common width
    assert!(out.stdout.contains(" 0\n-1\n 1\n"));
}

#[test]
fn compare_reports_a_certificate() {
    let out = tiltrep("compare dn-rank2 --n 5 --i 1 --j 2 --m 1");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let last = out.stdout.lines().last().unwrap();
    assert!(last.starts_with("ISOMORPHIC certificate sha256:"), "{last}");
    assert!(last.ends_with("seed 0x711720240d0e0001"));
    let e6 = tiltrep("compare lambda-e6 --m 2 --format json");
    let doc: serde_json::Value = serde_json::from_str(&e6.stdout).unwrap();
    assert_eq!(doc["status"], "ISOMORPHIC");
    assert_eq!(doc["family"], "e6-rank3(series=1,m=2)");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        "compare dn-rank2 --n 6 --i 2 --j 4 --m 2",
        "functor e6-rank3 --m 1 --format json",
        "verify hom --max-n 5 --max-m 1",
        "describe tilting-e6",
    ] {
        assert_eq!(tiltrep(args), tiltrep(args), "{args}");
    }
}

#[test]
fn verify_passes_on_small_ranges() {
    let out = tiltrep("verify all --max-n 5 --max-m 1");
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.lines().all(|l| !l.starts_with("FAIL")));
    assert!(out
        .stdout
        .contains("PASS  functor  dn-rank2(n=5,i=1,j=2,m=1)"));
    assert!(out.stdout.trim_end().ends_with("checks, 0 failed"));
}

#[test]
fn usage_errors_exit_with_2_and_name_the_bounds() {
    let out = tiltrep("build dn-rank2 --n 5 --i 3 --j 2 --m 1");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("1 <= i < j <= n-2"), "{}", out.stderr);

    let out = tiltrep("build dn-rank2 --n 5 --i 1 --j 2");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("needs --m"));

    let out = tiltrep("build dn-rank2 --n 99 --i 1 --j 2 --m 0");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("4..=40"));

    assert_eq!(tiltrep("build no-such-family").code, 2);
    assert_eq!(tiltrep("build e6-rank3 --m 1 --n 5").code, 2);
    assert_eq!(tiltrep("build e6-rank3 --m 1 --field fp:4").code, 2);
    assert_eq!(tiltrep("describe dn:3").code, 2);
    assert_eq!(
        tiltrep("functor dn-rank1 --type 1 --n 5 --i 1 --m 1").code,
        2
    );
    assert_eq!(tiltrep("verify all --max-n 2").code, 2);
}

#[test]
fn export_round_trips_through_import() {
    let dir = std::env::temp_dir().join(format!("tiltrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n.json");
    let p = path.to_str().unwrap();
    let out = tiltrep(&format!(
        "export dn-rank2 --n 6 --i 1 --j 3 --m 2 --format json --out {p}"
    ));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    let rep = from_json(&text).unwrap();
    assert_eq!(rep, dn_rank2(6, 1, 3, 2, Field::Rationals).unwrap());

    let again = tiltrep(&format!("import {p} --format json"));
    assert_eq!(again.code, 0);
    assert_eq!(again.stdout, text);
    assert_eq!(text.trim_end(), to_json(&rep));

    std::fs::write(&path, "{\"field\": \"q\"}").unwrap();
    assert_eq!(tiltrep(&format!("import {p}")).code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn prime_fields_are_accepted() {
    let out = tiltrep("compare dn-rank2 --n 5 --i 1 --j 3 --m 1 --field fp:7");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let out = tiltrep("build lambda-rank2 --p 3 --i 1 --j 2 --m 1 --field fp:3 --format json");
    assert!(out.stdout.contains("\"field\": \"fp:3\""));
}

#[test]
fn describe_targets() {
    let out = tiltrep("describe canonical:3,2,2");
    assert!(out
        .stdout
        .ends_with("relation: gamma2·gamma1 - alpha3·alpha2·alpha1 - beta2·beta1 = 0\n"));
    let out = tiltrep("describe tilting-dn:4");
    assert!(out.stdout.contains("dim Hom(row, column):"));
    assert!(out.stdout.contains("vertex map: 1=T1 2=T2 3=T3 4=T4 5=T5"));
    let out = tiltrep("describe e6 --format json");
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 7);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tiltrep");
    let ok = Command::new(bin)
        .args(["compare", "e6-rank3", "--m", "1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("ISOMORPHIC"));
    let bad = Command::new(bin)
        .args(["build", "dn-rank2", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
