use std::ffi::OsString;
use std::process::ExitCode;

use clap::Parser;
use hypersymplectic::cli::{execute, Cli};
use hypersymplectic::Error;

/// Parses and executes one invocation, returning the process exit code:
/// 0 on success, 1 for bad input, 2 for internal errors.
fn run(args: impl IntoIterator<Item = OsString>) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return 0;
        }
        Err(e) => {
            let _ = e.print();
            return 1;
        }
    };
    match execute(&cli).map_err(anyhow::Error::from) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err:#}");
            let internal = err.downcast_ref::<Error>().is_some_and(Error::is_internal);
            if internal {
                2
            } else {
                1
            }
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

#[cfg(test)]
mod tests {
    use std::path::Path;

    use serde_json::Value;

    use super::run;

    /// Runs with `--output` into a temp file; returns exit code and output.
    fn run_to_file(args: &[&str]) -> (u8, String) {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("out");
        let mut full: Vec<String> = std::iter::once("hypersym").chain(args.iter().copied()).map(String::from).collect();
        full.push("--output".into());
        full.push(out.to_str().unwrap().into());
        let code = run(full.into_iter().map(Into::into));
        (code, std::fs::read_to_string(&out).unwrap_or_default())
    }

    fn code(args: &[&str]) -> u8 {
        run_to_file(args).0
    }

    fn json(args: &[&str]) -> Value {
        let (code, text) = run_to_file(args);
        assert_eq!(code, 0, "{args:?}");
        serde_json::from_str(&text).unwrap()
    }

    fn write(dir: &Path, name: &str, text: &str) -> String {
        let path = dir.join(name);
        std::fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_owned()
    }

    #[test]
    fn verify_all_threestep_non_flat() {
        let v = json(&["verify-all", "--example", "threestep", "--a", "0", "--b", "1", "--c", "0"]);
        assert_eq!(v["step"], 3);
        assert_eq!(v["flat"], false);
        assert_eq!(v["ricci_zero"], true);
        assert_eq!(v["abelian"]["abelian_j"], true);
    }

    #[test]
    fn verify_all_threestep_flat_when_b_equals_c() {
        let v = json(&["verify-all", "--example", "threestep", "--a", "1", "--b", "1", "--c", "1"]);
        assert_eq!(v["step"], 2);
        assert_eq!(v["flat"], true);
    }

    #[test]
    fn verify_all_kodaira() {
        let v = json(&["verify-all", "--example", "kodaira", "--n", "1"]);
        assert_eq!(v["step"], 2);
        assert_eq!(v["flat"], true);
        assert_eq!(v["centre_dim"], 4);
        assert_eq!(v["signature"], serde_json::json!([4, 4]));
    }

    #[test]
    fn abelian_example_is_trivial() {
        let v = json(&["verify-all", "--example", "abelian", "--m", "2"]);
        assert_eq!(v["step"], 1);
        assert_eq!(v["centre_dim"], 4);
        assert_eq!(v["brackets"]["brackets"], serde_json::json!([]));
    }

    #[test]
    fn example_round_trips_through_validate_and_file_input() {
        let dir = tempfile::tempdir().unwrap();
        let (status, text) = run_to_file(&["example", "--example", "kodaira", "--n", "1"]);
        assert_eq!(status, 0);
        let path = write(dir.path(), "kodaira.json", &text);
        let v = json(&["validate", &path]);
        for key in ["torsion_free", "commuting", "omega_compatible", "pair_compatible"] {
            assert_eq!(v[key]["pass"], true, "{key}");
        }
        let from_file = run_to_file(&["verify-all", &path]).1;
        let built_in = run_to_file(&["verify-all", "--example", "kodaira", "--n", "1"]).1;
        assert_eq!(from_file, built_in);
    }

    #[test]
    fn degenerate_omega_exits_one() {
        let dir = tempfile::tempdir().unwrap();
        let zero = "[[0,0],[0,0]]";
        let text = format!(
            r#"{{"dim": 2, "nabla": [{zero},{zero}], "nabla_prime": [{zero},{zero}], "omega": {zero}}}"#
        );
        let path = write(dir.path(), "degenerate.json", &text);
        assert_eq!(code(&["validate", &path]), 1);
    }

    #[test]
    fn failed_hypothesis_exits_one() {
        // ∇_{e1} e1 = e1 on a plane: torsion-free and flat, but not ω-compatible
        let dir = tempfile::tempdir().unwrap();
        let text = r#"{"dim": 2, "nabla": [[[1,0],[0,0]],[[0,0],[0,0]]],
            "nabla_prime": [[[0,0],[0,0]],[[0,0],[0,0]]], "omega": [[0,1],[-1,0]]}"#;
        let path = write(dir.path(), "bad.json", text);
        assert_eq!(run_to_file(&["validate", &path]), (1, String::new()));
    }

    #[test]
    fn malformed_input_exits_one() {
        let dir = tempfile::tempdir().unwrap();
        let path = write(dir.path(), "broken.json", "{ not json");
        assert_eq!(code(&["validate", &path]), 1);
        assert_eq!(code(&["verify-all", &path]), 1);
        assert_eq!(code(&["verify-all", "--example", "kodaira"]), 1);
        assert_eq!(code(&["no-such-command"]), 1);
        assert_eq!(code(&["verify-all", "--example", "threestep", "--a", "x", "--b", "0", "--c", "0"]), 1);
    }

    #[test]
    fn geodesic_csv_layout() {
        let (status, text) = run_to_file(&[
            "geodesic", "--example", "kodaira", "--n", "1", "--a0", "1,0,0,0", "--b0", "0,0,0,0", "--t-end",
            "1/500", "--step", "1/1000",
        ]);
        assert_eq!(status, 0);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "t,a_1,a_2,a_3,a_4,b_1,b_2,b_3,b_4");
        assert_eq!(lines.len(), 4);
        let last: Vec<f64> = lines[3].split(',').map(|s| s.parse().unwrap()).collect();
        assert!((last[0] - 0.002).abs() < 1e-12);
        assert!((last[2] + 0.002).abs() < 1e-12);
    }

    #[test]
    fn coframe_at_identity_is_the_standard_one() {
        let v = json(&["coframe", "--example", "kodaira", "--n", "1", "--point", "0,0,0,0,0,0,0,0"]);
        let coframe = v["coframe"].as_array().unwrap();
        for (i, row) in coframe.iter().enumerate() {
            for (j, x) in row.as_array().unwrap().iter().enumerate() {
                assert_eq!(x.as_str().unwrap(), if i == j { "1" } else { "0" });
            }
        }
        assert_eq!(code(&["coframe", "--example", "kodaira", "--n", "1", "--point", "0,0"]), 1);
    }

    #[test]
    fn curvature_lists_nonzero_pairs() {
        let v = json(&["curvature", "--example", "threestep", "--a", "0", "--b", "1", "--c", "0"]);
        assert_eq!(v["flat"], false);
        assert!(!v["nonzero"].as_array().unwrap().is_empty());
    }
}
