use std::process::Command;

use uhsl2::algebra::Irrep;
use uhsl2::halfint::HalfInt;
use uhsl2::scalar::json::{decode_matrix, MatrixJson};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_uhsl2"));
    c.env_remove("UHSL2_FORMAT");
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn decompose_prints_direct_sum() {
    let (code, out, _) = run(&["decompose", "--j1", "1/2", "--j2", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("1 ⊕ 0"));
    let (_, out, _) = run(&["decompose", "--j1", "3/2", "--j2", "1"]);
    assert_eq!(out.lines().next(), Some("5/2 ⊕ 3/2 ⊕ 1/2"));
}

#[test]
fn classical_y_matrix() {
    let (code, out, _) = run(&["irrep", "--j", "1", "--gen", "Y", "--h-eval", "0", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let m: MatrixJson = serde_json::from_value(v["generators"]["Y"].clone()).unwrap();
    let irrep = Irrep::new(HalfInt::ONE).unwrap();
    assert_eq!(decode_matrix(&m).unwrap(), irrep.sl2.zm);
}

#[test]
fn y_matrix_json_round_trips() {
    let (_, out, _) = run(&["irrep", "--j", "1", "--gen", "Y", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let m: MatrixJson = serde_json::from_value(v["generators"]["Y"].clone()).unwrap();
    let irrep = Irrep::new(HalfInt::ONE).unwrap();
    assert_eq!(decode_matrix(&m).unwrap(), irrep.rep.y);
    assert_eq!(serde_json::to_value(&m).unwrap(), v["generators"]["Y"]);
}

#[test]
fn unit_generator_json() {
    let (_, out, _) = run(&["irrep", "--j", "1/2", "--gen", "unit", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let m: MatrixJson = serde_json::from_value(v["generators"]["unit"].clone()).unwrap();
    assert_eq!(m.shape, [2, 2]);
    assert!(decode_matrix(&m).unwrap().is_identity());
}

#[test]
fn csv_uses_canonical_scalars() {
    let (code, out, _) = run(&["irrep", "--j", "1", "--gen", "Y", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("generator,row,col,value\n"));
    assert!(out.contains("Y,0,1,-(1/4)*sqrt(2)*h^2\nY,0,2,0\n"), "{out}");
}

#[test]
fn format_from_environment() {
    let out = bin().args(["alpha", "--j1", "1/2", "--j2", "1/2"]).env("UHSL2_FORMAT", "csv").output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("k1,k2,m1,m2,alpha\n"));
}

#[test]
fn decimal_half_integers() {
    let (a, x, _) = run(&["cgc", "--j1", "1.5", "--j2", "0.5", "--format", "csv"]);
    let (b, y, _) = run(&["cgc", "--j1", "3/2", "--j2", "1/2", "--format", "csv"]);
    assert_eq!((a, b), (0, 0));
    assert_eq!(x, y);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["irrep", "--j", "1/3"]).0, 2);
    assert_eq!(run(&["irrep", "--j", "1", "--gen", "Q"]).0, 2);
    assert_eq!(run(&["cgc", "--j1", "1", "--j2", "1", "--j", "3"]).0, 2);
    assert_eq!(run(&["alpha", "--j1", "1", "--j2", "1", "--m1", "2", "--m2", "0"]).0, 2);
    assert_eq!(run(&["--format", "yaml", "verify"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    let (code, _, err) = run(&["verify", "--max-j", "x"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: invalid value"));
}

#[test]
fn verify_is_deterministic() {
    let strip = |s: String| -> String {
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        fn scrub(v: &mut serde_json::Value) {
            match v {
                serde_json::Value::Object(m) => {
                    m.remove("wall_time_ms");
                    m.values_mut().for_each(scrub);
                }
                serde_json::Value::Array(a) => a.iter_mut().for_each(scrub),
                _ => {}
            }
        }
        scrub(&mut v);
        v.to_string()
    };
    let (a, x, _) = run(&["verify", "--max-j", "1", "--format", "json"]);
    let (b, y, _) = run(&["verify", "--max-j", "1", "--format", "json"]);
    assert_eq!((a, b), (0, 0));
    assert_eq!(strip(x), strip(y));
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("uhsl2-cli-{}.csv", std::process::id()));
    let (code, out, _) = run(&["alpha", "--j1", "1", "--j2", "1/2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("k1,k2,m1,m2,alpha\n"));
}

#[test]
fn wigner_eckart_and_tensorop() {
    let (code, out, _) = run(&["wigner-eckart", "--realization", "boson", "--j2", "1/2"]);
    assert_eq!(code, 0);
    assert!(out.contains("I(1/2 1/2 1) = 1*sqrt(2)"), "{out}");
    let (code, out, _) = run(&["wigner-eckart", "--realization", "rank1", "--j2", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"][0]["outcome"], "ok");
    let (code, out, _) = run(&["tensorop", "--realization", "fermion"]);
    assert_eq!(code, 0);
    assert!(out.contains("fermion"));
}
