use std::fs;

use invdel::cache::{file_name, load, load_or_build, store, CacheStatus, Lookup};
use invdel_core::cayley::{build_dclass, CACHE_FORMAT_VERSION};

#[test]
fn names_carry_m_only_when_it_differs() {
    assert_eq!(file_name(5, 5, 3), "delta_5_3.bin");
    assert_eq!(file_name(6, 4, 3), "delta_6_3_m4.bin");
}

#[test]
fn round_trip_then_hit() {
    let dir = tempfile::tempdir().unwrap();
    let first = load_or_build(dir.path(), 5, 5, 3, || build_dclass(5, 5, 3)).unwrap();
    assert_eq!(first.status, CacheStatus::Built);
    assert!(first.store_error.is_none());
    assert!(dir.path().join("delta_5_3.bin").exists());

    let second = load_or_build(dir.path(), 5, 5, 3, || panic!("should not rebuild")).unwrap();
    assert_eq!(second.status, CacheStatus::Hit);
    assert_eq!(second.graph, first.graph);
}

#[test]
fn missing_file_is_missing() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(
        load(dir.path(), 4, 4, 2).unwrap(),
        Lookup::Missing
    ));
}

#[test]
fn corrupt_payload_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let g = build_dclass(4, 4, 2).unwrap();
    let path = store(dir.path(), &g).unwrap();
    let mut bytes = fs::read(&path).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0xff;
    fs::write(&path, &bytes).unwrap();

    let loaded = load_or_build(dir.path(), 4, 4, 2, || build_dclass(4, 4, 2)).unwrap();
    match &loaded.status {
        CacheStatus::Rebuilt(why) => assert!(why.contains("checksum"), "{why}"),
        other => panic!("expected a rebuild, got {other:?}"),
    }
    assert_eq!(loaded.graph, g);
    // The rewritten file is good again.
    assert!(matches!(load(dir.path(), 4, 4, 2).unwrap(), Lookup::Hit(_)));
}

#[test]
fn other_format_version_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let g = build_dclass(4, 4, 3).unwrap();
    let path = store(dir.path(), &g).unwrap();
    let mut bytes = fs::read(&path).unwrap();
    bytes[4..8].copy_from_slice(&(CACHE_FORMAT_VERSION + 1).to_le_bytes());
    fs::write(&path, &bytes).unwrap();

    let loaded = load_or_build(dir.path(), 4, 4, 3, || build_dclass(4, 4, 3)).unwrap();
    assert!(matches!(&loaded.status, CacheStatus::Rebuilt(why) if why.contains("version")));
}

#[test]
fn truncated_and_foreign_files_are_stale() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join(file_name(4, 4, 2)), b"IDC").unwrap();
    assert!(matches!(
        load(dir.path(), 4, 4, 2).unwrap(),
        Lookup::Stale(_)
    ));
    fs::write(dir.path().join(file_name(4, 4, 2)), b"nope, not a graph").unwrap();
    assert!(matches!(
        load(dir.path(), 4, 4, 2).unwrap(),
        Lookup::Stale(_)
    ));
}

#[test]
fn header_for_other_parameters_is_stale() {
    let dir = tempfile::tempdir().unwrap();
    let g = build_dclass(3, 4, 2).unwrap();
    fs::write(dir.path().join(file_name(4, 4, 2)), g.encode()).unwrap();
    match load(dir.path(), 4, 4, 2).unwrap() {
        Lookup::Stale(why) => assert!(why.contains("m=3"), "{why}"),
        other => panic!("expected stale, got {other:?}"),
    }
}
