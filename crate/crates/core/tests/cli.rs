use std::fs::{self, File};
use std::path::Path;
use std::process::{Command, Output};

use prpv::io;
use prpv::stats::total_variation;

fn prpv(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prpv"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn prpv")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field<'a>(summary: &'a str, key: &str) -> Option<&'a str> {
    summary
        .split_whitespace()
        .find_map(|kv| kv.strip_prefix(key)?.strip_prefix('='))
}

#[test]
fn generate_twice_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "generate",
        "--method",
        "norm",
        "--dim",
        "4",
        "--samples",
        "3",
        "--seed",
        "7",
        "--shuffle",
    ];
    let a = prpv(dir.path(), &[&args[..], &["--out", "a.csv"]].concat());
    let b = prpv(dir.path(), &[&args[..], &["--out", "b.csv"]].concat());
    assert!(a.status.success() && b.status.success());
    let fa = fs::read(dir.path().join("a.csv")).unwrap();
    assert_eq!(fa, fs::read(dir.path().join("b.csv")).unwrap());

    let vs = io::read_vectors_csv(fa.as_slice()).unwrap();
    assert_eq!(vs.len(), 3);
    assert!(vs
        .iter()
        .all(|v| v.len() == 4 && (v.iter().sum::<f64>() - 1.0).abs() < 1e-12));

    let line = stdout(&a);
    assert_eq!(line.lines().count(), 1);
    assert_eq!(field(&line, "command"), Some("generate"));
    assert_eq!(field(&line, "seed"), Some("7"));
    assert_eq!(field(&line, "draws"), Some("18"));
    assert_eq!(field(&line, "out"), Some("a.csv"));
}

#[test]
fn means_of_biased_normalization_d5() {
    let dir = tempfile::tempdir().unwrap();
    let o = prpv(
        dir.path(),
        &[
            "means",
            "--method",
            "norm",
            "--dim",
            "5",
            "--samples",
            "1000000",
            "--seed",
            "1",
        ],
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let means = io::read_means_csv(File::open(dir.path().join("means.csv")).unwrap()).unwrap();
    for (m, e) in means.iter().zip([0.5, 0.25, 0.125, 0.0625, 0.0625]) {
        assert!((m - e).abs() < 0.003, "{means:?}");
    }
    assert_eq!(field(&stdout(&o), "draws"), Some("4000000"));
}

#[test]
fn compare_d8_is_below_one_percent() {
    let dir = tempfile::tempdir().unwrap();
    let o = prpv(
        dir.path(),
        &[
            "compare",
            "--dim",
            "8",
            "--samples",
            "1000000",
            "--bins",
            "64",
            "--seed",
            "1",
        ],
    );
    assert!(o.status.success());
    let line = stdout(&o);
    let tv: f64 = field(&line, "tv").unwrap().parse().unwrap();
    assert!(tv < 0.01, "{tv}");
    let (norm, trig) =
        io::read_compare_csv(File::open(dir.path().join("compare.csv")).unwrap()).unwrap();
    assert_eq!(total_variation(&norm, &trig).unwrap(), tv);
}

#[test]
fn trig_exact_reports_failure_rate_without_aborting() {
    let dir = tempfile::tempdir().unwrap();
    let o = prpv(
        dir.path(),
        &[
            "generate",
            "--method",
            "trig-exact",
            "--dim",
            "5",
            "--samples",
            "20000",
            "--seed",
            "3",
        ],
    );
    assert!(o.status.success());
    let line = stdout(&o);
    let rate: f64 = field(&line, "failure_rate").unwrap().parse().unwrap();
    assert!((rate - 23.0 / 24.0).abs() < 0.05, "{rate}");
    let failures: usize = field(&line, "failures").unwrap().parse().unwrap();
    let vs = io::read_vectors_csv(File::open(dir.path().join("generate.csv")).unwrap()).unwrap();
    assert_eq!(vs.len() + failures, 20000);
}

#[test]
fn rejected_flag_combinations_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["generate", "--method", "trig-exact", "--shuffle"][..],
        &["generate", "--dim", "1"],
        &["simplex", "--dim", "4"],
        &["tail", "--threshold", "1.5"],
        &["hist", "--bins", "1"],
        &["generate", "--method", "dirichlet"],
        &["qstate", "--method", "iid"],
    ] {
        let o = prpv(dir.path(), args);
        assert!(!o.status.success(), "{args:?} should fail");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn iid_shuffle_is_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let o = prpv(
        dir.path(),
        &["generate", "--method", "iid", "--shuffle", "--samples", "5"],
    );
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert_eq!(field(&stdout(&o), "draws"), Some("20"));
}

#[test]
fn missing_output_directory_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = prpv(
        dir.path(),
        &["generate", "--samples", "2", "--out", "no/such/dir/x.csv"],
    );
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("no/such/dir/x.csv"));
}

#[test]
fn json_outputs_parse() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| {
        let o = prpv(
            dir.path(),
            &[args, &["--format", "json", "--samples", "50"]].concat(),
        );
        assert!(
            o.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    };
    run(&["generate", "--method", "trig", "--shuffle"]);
    run(&["means"]);
    run(&["hist", "--component", "2"]);
    run(&["tail", "--method", "iid"]);
    run(&["compare", "--bins", "16"]);
    run(&["simplex", "--dim", "3"]);
    run(&["qstate", "--dim", "3"]);

    let open = |name: &str| File::open(dir.path().join(name)).unwrap();
    let v: io::VectorsDoc = io::read_json(open("generate.json")).unwrap();
    assert_eq!((v.vectors.len(), v.dim, v.shuffled), (50, 4, true));
    let m: io::MeansDoc = io::read_json(open("means.json")).unwrap();
    assert_eq!(m.samples, 50);
    let h: io::HistogramDoc = io::read_json(open("hist.json")).unwrap();
    assert_eq!((h.component, h.histogram.total()), (2, 50));
    let t: io::TailReport = io::read_json(open("tail.json")).unwrap();
    assert_eq!(t.samples, 50);
    let c: io::CompareDoc = io::read_json(open("compare.json")).unwrap();
    assert_eq!(c.norm.bins(), 16);
    let p: io::PointsDoc = io::read_json(open("simplex.json")).unwrap();
    assert_eq!(p.points.len(), 50);
    let s: io::StatesDoc = io::read_json(open("qstate.json")).unwrap();
    assert!(s
        .to_states()
        .iter()
        .all(|psi| (prpv::state_norm(psi) - 1.0).abs() < 1e-12));
}

#[test]
fn bench_writes_records_for_both_methods() {
    let dir = tempfile::tempdir().unwrap();
    let o = prpv(dir.path(), &["bench", "--dim", "8", "--samples", "1000"]);
    assert!(o.status.success());
    let recs = io::read_bench_csv(File::open(dir.path().join("bench.csv")).unwrap()).unwrap();
    let keys: Vec<(String, usize)> = recs.iter().map(|r| (r.method.to_string(), r.dim)).collect();
    assert_eq!(
        keys,
        [
            ("norm", 2),
            ("norm", 4),
            ("norm", 8),
            ("trig", 2),
            ("trig", 4),
            ("trig", 8)
        ]
        .map(|(m, d)| (m.to_owned(), d))
    );
    assert!(recs
        .iter()
        .all(|r| r.per_vector_seconds > 0.0 && r.reps >= 1000));
}
