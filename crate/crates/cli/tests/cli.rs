use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hxdft::io::{read_signal, write_root, write_signal, SignalData};
use hxdft::linalg::{max_abs_diff, re};
use hxdft::root::quaternion_mu;
use hxdft::{quaternion_root, AlgebraTag, CMatrix, GroundField, HValue, Signal1D, Signal2D};
use hxdft_cli::gen;
use hxdft_cli::verify::{run, Suite};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

fn hxdft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hxdft"))
        .args(args)
        .env_remove(hxdft_cli::SEED_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn roots_to_file(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["roots"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", s(&path)]);
    let o = hxdft(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    path
}

#[test]
fn truncated_mu_parameters_give_mu() {
    let dir = TempDir::new().unwrap();
    let path = roots_to_file(
        &dir,
        "mu.json",
        &[
            "quaternion",
            "0.577350269",
            "0.577350269",
            "0.577350269",
            "--matrix",
        ],
    );
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"kind\":\"matrix\""), "{text}");
    let root = hxdft::io::read_root(&path).unwrap();
    assert!(max_abs_diff(root.entries(), quaternion_mu().entries()) <= 1e-15);
}

#[test]
fn printed_cl20_and_param_bc() {
    let o = hxdft(&["roots", "cl20", "1", "1", "1.7320508", "--matrix"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let root = hxdft::io::parse_root(&stdout(&o)).unwrap();
    let r3 = 3f64.sqrt();
    assert_eq!(root.entries()[(0, 3)], re(-r3));
    assert_eq!(root.entries()[(3, 0)], re(r3));

    let o = hxdft(&["roots", "param-bc", "1", "-2", "+"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"kind":"matrix","entries":[[1.0,1.0],[-2.0,-1.0]]}"#
    );
}

#[test]
fn roots_list_and_errors() {
    let o = hxdft(&["roots", "--list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with('#')).count(), 7);
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        hxdft::io::parse_root(line).unwrap();
    }

    let o = hxdft(&["roots", "cl11", "1", "1", "1"]);
    assert!(!o.status.success());
    assert!(
        stderr(&o).contains("b1^2 - b2^2 + beta^2 = -1"),
        "{}",
        stderr(&o)
    );
    assert!(!hxdft(&["roots"]).status.success());
}

#[test]
fn identity_root_file_is_rejected() {
    let dir = TempDir::new().unwrap();
    let root = dir.path().join("id.json");
    std::fs::write(&root, r#"{"kind":"matrix","entries":[[1,0],[0,1]]}"#).unwrap();
    let sig = dir.path().join("f.txt");
    let f = Signal1D::new(CMatrix::zeros(2, 4), GroundField::Real).unwrap();
    write_signal(&sig, &f.into()).unwrap();
    let o = hxdft(&["fwd", "-s", s(&sig), "-r", s(&root)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("not a root of -1"), "{}", stderr(&o));
}

#[test]
fn fwd_inv_round_trip_unitary() {
    let dir = TempDir::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = gen::signal1d(&mut rng, AlgebraTag::Quaternion, 13);
    let (sig, spec, back) = (
        dir.path().join("f"),
        dir.path().join("F"),
        dir.path().join("g"),
    );
    write_signal(&sig, &f.clone().into()).unwrap();
    let root = roots_to_file(
        &dir,
        "mu.json",
        &["quaternion", "0.577350269", "0.577350269", "0.577350269"],
    );

    for (cmd, input, output) in [("fwd", &sig, &spec), ("inv", &spec, &back)] {
        let o = hxdft(&[
            cmd,
            "-s",
            s(input),
            "-r",
            s(&root),
            "--scale",
            "unitary",
            "-o",
            s(output),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let SignalData::OneD(g) = read_signal(&back).unwrap() else {
        panic!("1D expected")
    };
    assert!(max_abs_diff(g.data(), f.data()) <= 1e-10);
    assert_eq!(g.algebra(), Some(AlgebraTag::Quaternion));
}

#[test]
fn delta_forward_scaled_is_flat() {
    let dir = TempDir::new().unwrap();
    let m_len = 8;
    let mut values = vec![HValue::zero(AlgebraTag::Complex); m_len];
    values[0] = HValue::one(AlgebraTag::Complex);
    let sig = dir.path().join("delta");
    write_signal(&sig, &Signal1D::from_values(&values).unwrap().into()).unwrap();
    let root = roots_to_file(&dir, "j.json", &["complex"]);
    let o = hxdft(&["fwd", "-s", s(&sig), "-r", s(&root), "--scale", "forward"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let SignalData::OneD(spec) = hxdft::io::parse_signal(&stdout(&o)).unwrap() else {
        panic!()
    };
    for u in 0..m_len {
        let col = spec.data().column(u);
        assert!((col[0].re - 1.0 / m_len as f64).abs() <= 1e-15);
        assert!(col[1].norm() <= 1e-15);
    }
}

#[test]
fn two_sided_round_trip_with_non_orthogonal_roots() {
    let dir = TempDir::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let f: Signal2D = gen::signal2d(&mut rng, AlgebraTag::Quaternion, 8, 8);
    let sig = dir.path().join("f");
    write_signal(&sig, &f.clone().into()).unwrap();
    let left = roots_to_file(
        &dir,
        "j.json",
        &["quaternion", "0.577350269", "0.577350269", "0.577350269"],
    );
    let right = dir.path().join("k.json");
    write_root(&right, &quaternion_root(0.6, 0.0, 0.8).unwrap()).unwrap();
    let (spec, back) = (dir.path().join("F"), dir.path().join("g"));
    for (cmd, input, output) in [("fwd2d", &sig, &spec), ("inv2d", &spec, &back)] {
        let o = hxdft(&[
            cmd,
            "-s",
            s(input),
            "--left",
            s(&left),
            "--right",
            s(&right),
            "-o",
            s(output),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let SignalData::TwoD(g) = read_signal(&back).unwrap() else {
        panic!("2D expected")
    };
    assert!(g.max_abs_diff(&f) <= 1e-10);

    let o = hxdft(&["fwd", "-s", s(&sig), "-r", s(&left)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("2D signal"));
}

#[test]
fn verify_all_passes() {
    let o = hxdft(&["verify", "--all"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    let props: Vec<&str> = text.lines().filter(|l| l.starts_with("PROP ")).collect();
    assert!(props.len() > 40);
    for line in props {
        let fields: Vec<&str> = line.split(' ').collect();
        assert_eq!(fields.len(), 4, "{line}");
        assert_eq!(fields[2], "PASS", "{line}");
        assert!(fields[3]
            .strip_prefix("residual=")
            .unwrap()
            .parse::<f64>()
            .is_ok());
    }
}

#[test]
fn verify_single_algebra_and_seed_env() {
    let o = hxdft(&["verify", "--algebra", "cl11"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let props: Vec<&str> = text.lines().filter(|l| l.starts_with("PROP ")).collect();
    assert!(!props.is_empty());
    assert!(props.iter().all(|l| l.starts_with("PROP cl11.")), "{text}");

    let o = Command::new(env!("CARGO_BIN_EXE_hxdft"))
        .args(["verify", "--algebra", "complex"])
        .env(hxdft_cli::SEED_ENV, "42")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("# seed=42 "));
    let o = hxdft(&["verify", "--algebra", "complex", "--seed", "43"]);
    assert!(stdout(&o).contains("# seed=43 "));
}

#[test]
fn verify_is_deterministic() {
    let a = hxdft(&["verify", "--algebra", "quaternion"]);
    let b = hxdft(&["verify", "--algebra", "quaternion"]);
    assert_eq!(a.stdout, b.stdout);
}

fn transposed(v: &HValue) -> CMatrix {
    hxdft::to_matrix(v).transpose()
}

#[test]
fn transposed_quaternion_layout_fails_homomorphism() {
    let suite = Suite {
        embed: transposed,
        ..Suite::new(hxdft_cli::DEFAULT_SEED)
    };
    let results = run(&suite, &[AlgebraTag::Quaternion], false);
    let homo = results
        .iter()
        .find(|r| r.name == "quaternion.homomorphism")
        .unwrap();
    assert!(!homo.passed(), "{homo}");
    assert!(homo
        .to_string()
        .starts_with("PROP quaternion.homomorphism FAIL"));
    // The correct layout passes the same suite.
    assert!(run(
        &Suite::new(hxdft_cli::DEFAULT_SEED),
        &[AlgebraTag::Quaternion],
        false
    )
    .iter()
    .all(|r| r.passed()));
}

fn conic_line(text: &str) -> [f64; 6] {
    let line = text.lines().find(|l| l.starts_with("# conic")).unwrap();
    let values: Vec<f64> = line
        .split(" = ")
        .nth(1)
        .unwrap()
        .split(',')
        .map(|t| t.parse().unwrap())
        .collect();
    values.try_into().unwrap()
}

fn tagged(text: &str, key: &str) -> f64 {
    let prefix = format!("# {key} = ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap()
        .parse()
        .unwrap()
}

#[test]
fn ellipse_for_complex_root_is_unit_circle() {
    let dir = TempDir::new().unwrap();
    let root = roots_to_file(&dir, "j.json", &["complex"]);
    let o = hxdft(&["ellipse", "-r", s(&root), "--m", "32", "--coeff", "1,0"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("x,y"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 33);
    let c = conic_line(&text);
    let k = 1.0 / 3f64.sqrt();
    for (g, w) in c.iter().zip([k, 0.0, k, 0.0, 0.0, -k]) {
        assert!((g - w).abs() < 1e-12, "{c:?}");
    }
    assert!(tagged(&text, "residual") < 1e-12);
}

#[test]
fn ellipse_for_param_bc_root() {
    let dir = TempDir::new().unwrap();
    let root = roots_to_file(&dir, "bc.json", &["param-bc", "1", "-2", "+"]);
    let o = hxdft(&["ellipse", "-r", s(&root), "--u0", "-3", "--coeff", "0.5,-1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(tagged(&text, "residual") < 1e-9);
    assert!(tagged(&text, "discriminant") < 0.0);
}

#[test]
fn ellipse_errors() {
    let dir = TempDir::new().unwrap();
    let root = roots_to_file(&dir, "j.json", &["complex"]);
    let o = hxdft(&["ellipse", "-r", s(&root), "--coeff", "0,0"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("degenerate path"), "{}", stderr(&o));

    let mu = roots_to_file(&dir, "mu.json", &["quaternion", "1", "0", "0"]);
    let o = hxdft(&["ellipse", "-r", s(&mu)]);
    assert!(!o.status.success());
}

#[test]
fn bench_reports_agreeing_paths() {
    let o = hxdft(&["bench", "--algebra", "complex", "--sizes", "1,8,32"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let diff: f64 = row.split_whitespace().last().unwrap().parse().unwrap();
        assert!(diff <= 1e-11, "{row}");
    }
    assert!(!hxdft(&["bench", "--sizes", "0"]).status.success());
}
