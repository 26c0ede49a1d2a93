use banana_core::partitions::Partition;
use banana_core::vertex::{min_renorm_volume, vertex_brute, vertex_closed, VertexKey};

fn legs() -> Vec<Partition> {
    vec![Partition::empty(), Partition::single(), Partition::new(vec![2]).unwrap(), Partition::new(vec![1, 1]).unwrap()]
}

#[test]
fn closed_matches_box_count() {
    let mut bad = Vec::new();
    for l in legs() {
        for m in legs() {
            for n in legs() {
                let key = VertexKey(l.clone(), m.clone(), n.clone());
                let v = min_renorm_volume(&key);
                let brute = vertex_brute(&key, 6).unwrap().shift(2 * v);
                let closed = vertex_closed(&key, 2 * v + 12).unwrap();
                if closed.agree_on(&brute, 2 * v, 2 * v + 12).is_err() {
                    bad.push(key.to_json());
                }
            }
        }
    }
    assert!(bad.is_empty(), "{bad:?}");
}

fn key(l: &[u32], m: &[u32], n: &[u32]) -> VertexKey {
    let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
    VertexKey(p(l), p(m), p(n))
}

#[test]
fn figure_key_volumes() {
    assert_eq!(min_renorm_volume(&key(&[2, 1], &[3, 2, 2], &[1, 1, 1])), -18);
    assert_eq!(min_renorm_volume(&key(&[2, 1], &[3, 3, 1], &[3])), -16);
    assert_eq!(min_renorm_volume(&key(&[], &[], &[4, 2])), 0);
}

#[test]
fn brute_count_starts_at_one_and_is_cyclic() {
    for k in [key(&[1], &[], &[]), key(&[2], &[1], &[]), key(&[1], &[1], &[1, 1]), key(&[2, 1], &[1], &[1])] {
        let b = vertex_brute(&k, 5).unwrap();
        assert_eq!(b.coeff(0), Some(banana_core::series::rat(1)), "{}", k.to_json());
        let r = k.rotate();
        assert_eq!(min_renorm_volume(&r), min_renorm_volume(&k));
        vertex_brute(&r, 5).unwrap().agree_on(&b, 0, 10).unwrap();
    }
}

#[test]
fn empty_key_is_plane_partitions() {
    let b = vertex_brute(&key(&[], &[], &[]), 6).unwrap();
    for (n, want) in [1, 1, 3, 6, 13, 24, 48].into_iter().enumerate() {
        assert_eq!(b.coeff(2 * n as i64), Some(banana_core::series::rat(want)));
    }
}
