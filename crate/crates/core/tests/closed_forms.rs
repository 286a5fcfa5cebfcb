use walsh::cores::{
    walsh_complete, walsh_cycle, walsh_k5e, walsh_m, walsh_matched_cycle, walsh_matched_path,
    walsh_mstar,
};
use walsh::oracle::{
    matched_walsh_bruteforce, network_walsh_bruteforce, walsh_bruteforce, Sign, SmallGraph,
};

fn two_k5_sharing_an_edge(with_shared: bool) -> SmallGraph {
    let mut edges = Vec::new();
    for block in [[0, 1, 2, 3, 4], [0, 1, 5, 6, 7]] {
        for i in 0..5 {
            for j in i + 1..5 {
                let (u, v) = (block[i], block[j]);
                if (u, v) != (0, 1) {
                    edges.push((u, v));
                }
            }
        }
    }
    if with_shared {
        edges.push((0, 1));
    }
    SmallGraph::new(8, &edges).unwrap()
}

#[test]
fn cycles_match_bruteforce() {
    for n in 3..=8 {
        let brute = walsh_bruteforce(&[SmallGraph::cycle(n)]).unwrap();
        assert_eq!(walsh_cycle(n as u32), brute, "n = {n}");
    }
}

#[test]
fn complete_graphs_match_bruteforce() {
    for n in 2..=6 {
        let brute = walsh_bruteforce(&[SmallGraph::complete(n)]).unwrap();
        assert_eq!(walsh_complete(n as u32), brute, "n = {n}");
    }
}

#[test]
fn glued_k5_pairs_match_bruteforce() {
    assert_eq!(
        walsh_m(),
        walsh_bruteforce(&[two_k5_sharing_an_edge(true)]).unwrap()
    );
    assert_eq!(
        walsh_mstar(),
        walsh_bruteforce(&[two_k5_sharing_an_edge(false)]).unwrap()
    );
}

#[test]
fn k5_minus_edge_network_matches_bruteforce() {
    let mut edges = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            if (i, j) != (0, 1) {
                edges.push((i, j));
            }
        }
    }
    let net = SmallGraph::new(5, &edges)
        .unwrap()
        .with_poles(0, 1)
        .unwrap();
    for sign in [Sign::Plus, Sign::Minus] {
        assert_eq!(
            walsh_k5e(sign),
            network_walsh_bruteforce(&net, sign).unwrap()
        );
    }
}

#[test]
fn matched_paths_match_bruteforce() {
    for n in 1..=9 {
        let brute = matched_walsh_bruteforce(&SmallGraph::path(n)).unwrap();
        assert_eq!(walsh_matched_path(n as u32), brute, "n = {n}");
    }
}

#[test]
fn matched_cycles_match_bruteforce() {
    for n in 3..=10 {
        let brute = matched_walsh_bruteforce(&SmallGraph::cycle(n)).unwrap();
        assert_eq!(walsh_matched_cycle(n as u32), brute, "n = {n}");
    }
}
