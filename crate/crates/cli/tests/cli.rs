use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn netbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netbound")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path.to_str().unwrap()]);
    assert!(netbound(&all).status.success());
    path
}

#[test]
fn gen_writes_expected_sizes() {
    let o = netbound(&["gen", "tri", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("p pgr 21 45\n"));
    assert!(stdout(&netbound(&["gen", "cycle", "15"])).contains("p pgr 15 15\n"));
    assert!(stdout(&netbound(&["gen", "grid", "2"])).contains("p pgr 4 4\n"));
    let a = stdout(&netbound(&["gen", "random-plane", "30", "--seed", "4"]));
    assert_eq!(a, stdout(&netbound(&["gen", "random-plane", "30", "--seed", "4"])));
    assert_ne!(a, stdout(&netbound(&["gen", "random-plane", "30", "--seed", "5"])));
    assert_eq!(netbound(&["gen", "grid", "0"]).status.code(), Some(2));
    assert_eq!(netbound(&["gen", "grid"]).status.code(), Some(2));
}

#[test]
fn net_order_reports() {
    let dir = tempfile::tempdir().unwrap();
    let c15 = gen(dir.path(), "c15.pgr", &["cycle", "15"]);
    let o = netbound(&["net-order", c15.to_str().unwrap(), "--frame", "5,10"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("order: 2\n"));
    let tri = gen(dir.path(), "tri.pgr", &["tri", "6"]);
    let o = netbound(&["net-order", tri.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["cover"].as_array().unwrap().len(), 6);
    let o = netbound(&["net-order", c15.to_str().unwrap(), "--frame", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bounds_and_decompose_agree() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(dir.path(), "g.pgr", &["grid", "6"]);
    let b: serde_json::Value =
        serde_json::from_slice(&netbound(&["bounds", g.to_str().unwrap(), "--json"]).stdout).unwrap();
    let kb = b["kb"].as_u64().unwrap();
    assert!((2..=7).contains(&kb));
    assert_eq!(b["treewidth"][1].as_i64().unwrap(), 4 * kb as i64 - 1);
    let td = dir.path().join("g.td");
    let o = netbound(&["decompose", g.to_str().unwrap(), "--out", td.to_str().unwrap(), "--json"]);
    let d: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(d["kb"].as_u64().unwrap(), kb);
    let o = netbound(&["verify", g.to_str().unwrap(), td.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid: yes\n"));
}

#[test]
fn verify_rejects_broken_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(dir.path(), "p.pgr", &["path", "5"]);
    let td = dir.path().join("bad.td");
    std::fs::write(&td, "s td 3 2 5\nb 1 1 2\nb 2 2 4\nb 3 4 5\n1 2\n2 3\n").unwrap();
    let o = netbound(&["verify", g.to_str().unwrap(), td.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("vertex 3 is in no bag"), "{}", stdout(&o));

    std::fs::write(&td, "s td 1 2\n").unwrap();
    assert_eq!(netbound(&["verify", g.to_str().unwrap(), td.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn oracles() {
    let dir = tempfile::tempdir().unwrap();
    let g3 = gen(dir.path(), "g3.pgr", &["grid", "3"]);
    let td = dir.path().join("g3.td");
    let o = netbound(&["oracle", "treewidth", g3.to_str().unwrap(), "--out", td.to_str().unwrap()]);
    assert!(stdout(&o).contains("treewidth: 3\n"));
    assert_eq!(netbound(&["verify", g3.to_str().unwrap(), td.to_str().unwrap()]).status.code(), Some(0));

    let sq = gen(dir.path(), "sq.pgr", &["split-square"]);
    let o = netbound(&["oracle", "net-order", sq.to_str().unwrap(), "--frame", "1,2"]);
    assert!(stdout(&o).contains("order: 2\ncover: a b\n"));

    let g4 = gen(dir.path(), "g4.pgr", &["grid", "4"]);
    let o = netbound(&["oracle", "treewidth", g4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit 15"));
    let o = netbound(&["oracle", "treewidth", g4.to_str().unwrap(), "--limit", "16"]);
    assert!(stdout(&o).contains("treewidth: 4\n"));
}

#[test]
fn disconnected_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.pgr");
    std::fs::write(
        &path,
        "c a triangle and a path\np pgr 6 5\nr 1 2 3\nr 2 3 1\nr 3 1 2\nr 4 5\nr 5 4 6\nr 6 5\no 1 2\no 4 5\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = netbound(&["bounds", p]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("component 2: 3 vertices from 4"));
    let td = dir.path().join("two.td");
    assert!(netbound(&["decompose", p, "--out", td.to_str().unwrap()]).status.success());
    assert_eq!(netbound(&["verify", p, td.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(netbound(&["net-order", p]).status.code(), Some(2));
}
