use std::process::{Command, Output};

use serde_json::Value;

fn vanvleck(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_vanvleck"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("HS_THREADS", t),
        None => cmd.env_remove("HS_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn zeros_of_order_one() {
    let out = vanvleck(&["zeros", "--alphas", "-1,0,1", "--rhos", "0.5,0.5,0.5", "--k", "1"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["schema_version"], "1.0.0");
    assert_eq!(v["command"], "zeros");
    let zeros: Vec<f64> = v["result"]["zeros"].as_array().unwrap().iter().map(|z| z.as_f64().unwrap()).collect();
    let r = 1.0 / 3f64.sqrt();
    assert_eq!(zeros.len(), 2);
    assert!((zeros[0] + r).abs() < 1e-12 && (zeros[1] - r).abs() < 1e-12, "{zeros:?}");
    assert_eq!(v["result"]["stieltjes"].as_array().unwrap().len(), 2);
}

#[test]
fn interlacing_holds_for_the_default_problem() {
    let out = vanvleck(&["interlace", "--k-max", "10"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    let verdicts = v["result"]["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 9);
    assert!(verdicts.iter().all(|x| x["holds"] == true));
    assert_eq!(v["result"]["all_hold"], true);
}

#[test]
fn unordered_singular_points_are_rejected() {
    let out = vanvleck(&["zeros", "--alphas", "1,0,-1", "--rhos", "0.5,0.5,0.5", "--k", "1"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error kind=validation:"), "{err}");
}

#[test]
fn malformed_arguments_exit_with_validation_status() {
    for args in
        [&["zeros", "--k", "x"][..], &["zeros", "--k", "2", "--rhos", "1,2"], &["lame", "--n", "3", "--modulus", "1.5"], &["frobnicate"]]
    {
        let out = vanvleck(args, None);
        assert_eq!(out.status.code(), Some(1), "{args:?}: {}", stderr(&out));
        assert!(stderr(&out).starts_with("error kind=validation:"));
    }
    let out = vanvleck(&["zeros", "--k", "2"], Some("0"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_identical_across_runs_and_thread_counts() {
    let args = ["interlace", "--alphas", "0,2,8", "--rhos", "0.3,1.7,0.9", "--k-max", "25"];
    let a = vanvleck(&args, Some("1"));
    let b = vanvleck(&args, Some("4"));
    let c = vanvleck(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let z = ["zeros", "--k", "17", "--format", "csv"];
    assert_eq!(vanvleck(&z, Some("1")).stdout, vanvleck(&z, Some("3")).stdout);
}

#[test]
fn csv_headers() {
    let cases: [(&[&str], &str); 8] = [
        (&["zeros", "--k", "3"], "k,index,nu,bracket_lo,bracket_hi,residual"),
        (&["interlace", "--k-max", "4"], "k,holds,min_gap,lo_ok,hi_ok,violation_index"),
        (&["spectral", "--k-max", "6"], "n,a_n,b_n"),
        (&["spectral", "--k-max", "6", "--table", "trace"], "k,sum_nu,sum_nu_sq"),
        (&["density", "--k", "20", "--points", "4"], "x,rho_A,arcsine,empirical_cdf"),
        (&["lame", "--n", "4", "--modulus", "0.5"], "gamma,m,index,lambda,h"),
        (&["equilateral", "--k", "5"], "k,zero_re,zero_im,ray_index,modulus"),
        (&["report", "--criteria", "9"], "id,title,passed,detail"),
    ];
    for (args, header) in cases {
        let mut args = args.to_vec();
        args.extend(["--format", "csv"]);
        let out = vanvleck(&args, None);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
        let text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(text.lines().next(), Some(header), "{args:?}");
        let width = header.split(',').count();
        if !args.contains(&"report") {
            assert!(text.lines().skip(1).all(|l| l.split(',').count() == width), "{args:?}");
        }
    }
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let args = ["equilateral", "--k", "7"];
    let direct = vanvleck(&args, None);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let out = vanvleck(&with_out, None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn equilateral_reports_rays_and_unequal_exponents() {
    let v = json(&vanvleck(&["equilateral", "--rho", "0.5", "--k", "4", "--conjecture"], None));
    assert_eq!(v["result"]["structure"]["center_multiplicity"], 2);
    assert_eq!(v["result"]["zeros"].as_array().unwrap().len(), 5);
    assert_eq!(v["result"]["conjecture"]["holds"], true);
    let out = vanvleck(&["equilateral", "--rhos", "0.3,0.7,1.4", "--k", "4"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["structure"]["classified"], false);
}

#[test]
fn lame_class_restriction() {
    let v = json(&vanvleck(&["lame", "--n", "4", "--modulus", "0.5", "--gamma", "0,0,0"], None));
    assert_eq!(v["result"]["class"]["m"], 2);
    assert_eq!(v["result"]["class_interlacing"]["holds"], true);
    let out = vanvleck(&["lame", "--n", "3", "--modulus", "0.5", "--gamma", "1,0,1"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn report_runs_selected_criteria() {
    let out = vanvleck(&["report", "--criteria", "9"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    let list = v["result"]["criteria"].as_array().unwrap();
    assert_eq!(list.len(), 1);
    assert_eq!(list[0]["id"], 9);
    assert_eq!(list[0]["passed"], true);
    assert!(list[0].get("seconds").is_none());
    assert!(stderr(&out).starts_with("PASS [9]"));
}

#[test]
fn report_rejects_bad_configuration() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("suite.toml");
    std::fs::write(&path, "no_such_setting = 3\n").unwrap();
    let out = vanvleck(&["report", "--config", path.to_str().unwrap(), "--criteria", "9"], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out).lines().count(), 1);
    let out = vanvleck(&["report", "--criteria", "12"], None);
    assert_eq!(out.status.code(), Some(1));
    std::fs::write(&path, "equilateral_k_max = 6\n").unwrap();
    let out = vanvleck(&["report", "--config", path.to_str().unwrap(), "--criteria", "9"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out)["parameters"]["config"]["equilateral_k_max"], 6);
}
