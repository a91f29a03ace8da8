use std::process::{Command, Output};

use qdiscover::{Identity, QSeries};
use qdiscover_cli::commands::{
    cmd_cfrac, cmd_discover, cmd_product, cmd_sum, cmd_verify, cmd_zeta, CfracTarget,
    DiscoverSource, ProductSource,
};
use qdiscover_cli::Status;
use serde_json::{json, Value};

fn qdiscover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdiscover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_out(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = qdiscover(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (v, out.status.code().unwrap())
}

#[test]
fn verify_examples() {
    let r = cmd_verify(Identity::First, 4, None).unwrap();
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["sum"]["coeffs"], json!(["1", "1", "1", "1", "2"]));
    assert_eq!(r.payload["product"], r.payload["sum"]);
    assert_eq!(r.verified_to, Some(4));

    let r = cmd_verify(Identity::First, 0, None).unwrap();
    assert_eq!((r.status, r.verified_to), (Status::Ok, Some(0)));

    let r = cmd_verify(Identity::Second, 200, None).unwrap();
    assert_eq!((r.status, r.verified_to), (Status::Ok, Some(200)));
}

#[test]
fn verify_reports_first_mismatch() {
    let wrong = Identity::First.product_pattern();
    let r = cmd_verify(Identity::Second, 30, Some(wrong)).unwrap();
    assert_eq!(r.status, Status::Mismatch);
    let m = r.mismatch.as_ref().unwrap();
    assert_eq!(
        (m.index, m.left.clone(), m.right.clone()),
        (1, 0.into(), 1.into())
    );
    assert_eq!(r.verified_to, Some(0));
    let v = r.to_json();
    assert_eq!(
        v["mismatch"],
        json!({"index": 1, "left": "0", "right": "1"})
    );
}

#[test]
fn discover_examples() {
    let r = cmd_discover(DiscoverSource::Identity(Identity::First), 50, 12).unwrap();
    assert_eq!(
        r.payload["pattern"],
        json!({"modulus": 5, "residues": [1, 4], "multiplicity": -1})
    );
    assert_eq!(r.payload["kind"], "conjecture");
    assert_eq!(r.verified_to, Some(50));

    let r = cmd_discover(DiscoverSource::Identity(Identity::Second), 50, 12).unwrap();
    assert_eq!(r.payload["pattern"]["residues"], json!([2, 3]));

    let r = cmd_discover(DiscoverSource::Identity(Identity::First), 3, 12).unwrap();
    assert_eq!(r.payload["pattern"], Value::Null);
    assert_eq!(
        r.payload["product"],
        json!({"factors": [{"e": 1, "m": -1}]})
    );
    assert_eq!(r.status, Status::Ok);

    assert!(cmd_discover(DiscoverSource::Identity(Identity::First), 0, 12).is_err());
}

#[test]
fn discover_on_partition_series() {
    let order = 40;
    let pf = qdiscover::ProductForm::from_factors((1..=order).map(|e| (e, -1))).unwrap();
    let s = pf.expand(order);
    let r = cmd_discover(DiscoverSource::Series(s), order, 12).unwrap();
    assert_eq!(
        r.payload["pattern"],
        json!({"modulus": 1, "residues": [0], "multiplicity": -1})
    );
}

#[test]
fn cfrac_examples() {
    let r = cmd_cfrac(CfracTarget::Golden, 5, 0).unwrap();
    let rows = r.payload["convergents"].as_array().unwrap();
    let last = rows.last().unwrap();
    assert_eq!(
        (last["numerator"].as_str(), last["denominator"].as_str()),
        (Some("8"), Some("5"))
    );
    assert!(r.text.contains("5  8/5  1.6000000000"));

    let r = cmd_cfrac(CfracTarget::RogersRamanujan, 4, 10).unwrap();
    let c4 = &r.payload["convergents"][3];
    assert_eq!(
        c4["numerator_text"],
        "1+zq+zq^2+zq^3+zq^4+z^2q^4+z^2q^5+z^2q^6"
    );
    assert_eq!(c4["denominator_text"], "1+zq^2+zq^3+zq^4+z^2q^6");

    assert!(cmd_cfrac(CfracTarget::Golden, 0, 0).is_err());
}

#[test]
fn zeta_example() {
    let r = cmd_zeta(30).unwrap();
    assert_eq!(
        r.payload["indices"],
        json!([2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
    );
    assert_eq!(
        r.text,
        "zeta(s) = prod over p in {2,3,5,7,11,13,17,19,23,29} of 1/(1 - p^(-s))\n"
    );
    assert!(cmd_zeta(0).is_err());
}

#[test]
fn sum_and_product_agree() {
    let s = cmd_sum(Identity::First, 30).unwrap();
    assert!(s
        .text
        .starts_with("1 + q/(1-q) + q^4/((1-q)(1-q^2)) + q^9/((1-q)(1-q^2)(1-q^3))"));
    let p = cmd_product(
        ProductSource::Pattern(Identity::First.product_pattern()),
        30,
    )
    .unwrap();
    assert_eq!(s.payload["series"], p.payload["series"]);
}

#[test]
fn exit_codes() {
    assert_eq!(qdiscover(&["verify", "-N", "50"]).status.code(), Some(0));
    let out = qdiscover(&[
        "verify",
        "--identity",
        "rr2",
        "--modulus",
        "5",
        "--residues",
        "1,4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        qdiscover(&["verify", "--identity", "rr3"]).status.code(),
        Some(2)
    );
    assert_eq!(qdiscover(&["discover", "-N", "0"]).status.code(), Some(2));
    assert_eq!(qdiscover(&["bogus"]).status.code(), Some(2));
    let out = qdiscover(&["product", "--modulus", "0", "--residues", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn json_is_deterministic_and_sorted() {
    let args = [
        "discover",
        "--identity",
        "rr2",
        "-N",
        "60",
        "--format",
        "json",
    ];
    let a = qdiscover(&args).stdout;
    let b = qdiscover(&args).stdout;
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    let keys: Vec<usize> = [
        "\"command\"",
        "\"order\"",
        "\"payload\"",
        "\"status\"",
        "\"verified_to\"",
    ]
    .iter()
    .map(|k| text.find(k).unwrap())
    .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn json_envelope() {
    let (v, code) = json_out(&["zeta", "-N", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "zeta");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["order"], 10);
    assert_eq!(v["verified_to"], 10);
    assert_eq!(v["payload"]["indices"], json!([2, 3, 5, 7]));

    let (v, code) = json_out(&[
        "verify",
        "--identity",
        "rr2",
        "--modulus",
        "5",
        "--residues",
        "2,4",
        "-N",
        "12",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "mismatch");
    assert!(v["mismatch"]["index"].is_u64());
}

#[test]
fn file_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let series = dir.path().join("series.json");
    // 1/(1-q^2)^3 up to q^12
    let mut s = QSeries::one(12);
    s.mul_one_minus_qpow_pow(2, &(-3).into()).unwrap();
    std::fs::write(
        &series,
        qdiscover_cli::json::qseries_to_json(&s).to_string(),
    )
    .unwrap();
    let (v, code) = json_out(&["discover", "--input", series.to_str().unwrap(), "-N", "12"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["payload"]["product"],
        json!({"factors": [{"e": 2, "m": -3}]})
    );

    let product = dir.path().join("product.json");
    std::fs::write(
        &product,
        r#"{"factors": [{"e": 1, "m": 1}, {"e": 2, "m": "-1"}]}"#,
    )
    .unwrap();
    let (v, code) = json_out(&["product", "--input", product.to_str().unwrap(), "-N", "4"]);
    assert_eq!(code, 0);
    // (1-q)/(1-q^2) = 1/(1+q)
    assert_eq!(
        v["payload"]["series"]["coeffs"],
        json!(["1", "-1", "1", "-1", "1"])
    );

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{not json").unwrap();
    assert_eq!(
        qdiscover(&["discover", "--input", broken.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(
        qdiscover(&["product", "--input", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
