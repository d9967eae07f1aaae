use std::process::Command;

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_zinbiel");
    let ok = Command::new(bin)
        .args(["zmul", "--letters", "2", "--left", "x", "--right", "y"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "(x y)\n");
    let bad = Command::new(bin).args(["embed"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
