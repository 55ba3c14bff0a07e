//! Pins the transcribed tables. A changed checksum means a row was edited;
//! re-check it against the printed table before updating the digest.

use closurelab::cli::manifest::{Manifest, TABLE1, TABLE2};
use sha2::{Digest, Sha256};

fn hex_digest(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

#[test]
fn table1_checksum() {
    assert_eq!(hex_digest(TABLE1), "7ad2e2493cb3dfc8b9d5c25d8df612cdc04f689e2e962c6fa78d2bdfcab08044");
}

#[test]
fn table2_checksum() {
    assert_eq!(hex_digest(TABLE2), "285e2f7c31905ec4fb050d16bb145bb0dc7721e15f048306d8f0e6deea69bc3a");
}

#[test]
fn table1_shape() {
    let t = Manifest::table1();
    let per_n: Vec<usize> = [3, 4, 5].iter().map(|n| t.entries.iter().filter(|e| e.has_tag(&format!("n={n}"))).count()).collect();
    assert_eq!(per_n, vec![2, 4, 9]);
    for e in &t.entries {
        let n: usize = e.tags.iter().find_map(|t| t.strip_prefix("n=")).unwrap().parse().unwrap();
        let dims = e.expected_dims().unwrap();
        let ms: Vec<usize> = dims.iter().map(|(m, _)| *m).collect();
        assert_eq!(ms, (0..=n).collect::<Vec<_>>(), "{}", e.name);
        assert_eq!(dims[0].1, 1);
        assert_eq!(dims[1].1, n);
        assert_eq!(dims[n].1, dims[n - 1].1, "{}: m = n repeats m = n − 1", e.name);
    }
}

#[test]
fn table2_shape() {
    let t = Manifest::table2();
    for e in &t.entries {
        let ms: Vec<usize> = e.expected_dims().unwrap().iter().map(|(m, _)| *m).collect();
        assert_eq!(ms, vec![2, 3, 4, 5], "{}", e.name);
        assert!(e.ideal.is_some());
    }
    let gates: Vec<&str> = t.entries.iter().filter(|e| e.has_tag("gate")).map(|e| e.ideal.as_deref().unwrap()).collect();
    assert_eq!(gates, vec!["(x^6)", "(x^2, y^5, xy)", "(x, y)^3", "(x, y, z, w, v)^2"]);
    let m5: Vec<usize> = t.entries.iter().filter(|e| e.has_tag("gate")).map(|e| e.expected["5"]).collect();
    assert_eq!(m5, vec![720, 785, 1085, 1875]);
}

#[test]
fn relations_reassemble_the_printed_ideal() {
    for e in Manifest::table1().entries.iter().chain(Manifest::table2().entries.iter()) {
        let printed = e.ideal.as_deref().unwrap().replace(' ', "");
        let joined = e.relations.join(",").replace(' ', "");
        assert!(printed == format!("({joined})") || printed == joined, "{}: {printed} vs {joined}", e.name);
    }
}
