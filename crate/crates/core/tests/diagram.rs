mod common;

use common::*;
use proptest::prelude::*;
use surfalt_core::diagram::{opposite, rotate};
use surfalt_core::sld::SldErrorKind;
use surfalt_core::*;

#[test]
fn trefoil_counts() {
    let src = data("trefoil.sld");
    let d = &src.diagram;
    assert_eq!(d.crossing_count(), 3);
    assert_eq!(d.edge_count(), 6);
    assert_eq!(d.faces().count(), 5);
    assert_eq!(d.genus(), 0);
    assert_eq!(d.components().len(), 1);
    assert!(d.is_alternating());
}

#[test]
fn kink_counts() {
    let d = data("kink.sld").diagram;
    assert_eq!((d.crossing_count(), d.edge_count(), d.faces().count(), d.genus()), (1, 2, 3, 0));
}

#[test]
fn gauss_examples() {
    let vt = from_virtual_gauss_code("O1+O2+U1+U2+").unwrap().diagram;
    assert_eq!((vt.faces().count(), vt.genus()), (2, 1));
    let kink = from_virtual_gauss_code("O1+U1+").unwrap().diagram;
    assert_eq!((kink.faces().count(), kink.genus()), (3, 0));
    let d = from_virtual_gauss_code("O1+U2+O2+U1+").unwrap().diagram;
    assert_eq!(d.genus(), oracle_genus(&d));
    assert_eq!(d.genus(), 0);
}

#[test]
fn gauss_file_matches_code() {
    let from_code = from_virtual_gauss_code("O1+O2+U1+U2+").unwrap().diagram;
    assert_eq!(data("virtual_trefoil.sld").diagram, from_code);
    let hopf = from_virtual_gauss_code("O1+U2+/U1+O2+").unwrap();
    let src = data("hopf.sld");
    assert_eq!(src.diagram, hopf.diagram);
    assert_eq!(src.orientation(), hopf.orientation);
}

#[test]
fn gauss_errors() {
    assert!(matches!(from_virtual_gauss_code(""), Err(GaussError::Empty)));
    assert!(from_virtual_gauss_code("O1+U2+").is_err());
    assert!(from_virtual_gauss_code("O1U1").is_err());
    assert!(from_virtual_gauss_code("O1+U1-").is_err());
    assert!(from_virtual_gauss_code("O1+O1+").is_err());
}

#[test]
fn sld_errors_carry_lines() {
    let err = parse_sld("crossings 1\nedge 0.0 0.1\nedge 0.1 0.2\n").unwrap_err();
    assert_eq!(err.line, 3);
    assert!(err.to_string().contains("used twice"), "{err}");

    let err = parse_sld("crossings 1\nedge 0.0 0.1\n").unwrap_err();
    assert!(matches!(err.kind, SldErrorKind::Diagram(DiagramError::DanglingPort { .. })), "{err:?}");

    let err = parse_sld("crossings 0\n").unwrap_err();
    assert_eq!(err.line, 1);

    let err = parse_sld("crossings 1\nedge 0.0 banana\n").unwrap_err();
    assert_eq!(err.line, 2);

    let err = parse_sld("crossings 1\nedge 0.0 0.4\nedge 0.1 0.2\n").unwrap_err();
    assert_eq!(err.line, 2);
}

#[test]
fn two_kinks_are_split() {
    let k = data("kink.sld").diagram;
    let d = k.disjoint_union(&k);
    assert!(d.is_split());
    assert_eq!(d.crossing_count(), 2);
    assert_eq!(d.components().len(), 2);
    assert!(!data("trefoil.sld").diagram.is_split());
}

#[test]
fn hopf_has_two_components() {
    let d = from_virtual_gauss_code("O1+U2+/U1+O2+").unwrap().diagram;
    assert_eq!(d.components().len(), 2);
    assert_eq!(d.genus(), 0);
    assert!(!d.is_split());
}

#[test]
fn switched_trefoil_is_not_alternating() {
    let d = data("trefoil.sld").diagram;
    for x in 0..3 {
        assert!(!d.switch_crossing(x).is_alternating());
    }
}

#[test]
fn trefoil_signs_agree() {
    let g = from_virtual_gauss_code("O1+U2+O3+U1+O2+U3+").unwrap();
    let signs = g.diagram.crossing_signs(&g.orientation);
    assert_eq!(signs.as_slice(), &[1, 1, 1]);
    let reversed = g.diagram.crossing_signs(&g.orientation.reversed_all());
    assert_eq!(reversed.as_slice(), &[1, 1, 1]);
    let mirror = from_virtual_gauss_code("O1-U2-O3-U1-O2-U3-").unwrap();
    assert_eq!(mirror.diagram.crossing_signs(&mirror.orientation).as_slice(), &[-1, -1, -1]);
}

#[test]
fn gauss_signs_are_respected() {
    let g = from_virtual_gauss_code("O1+U2-O3+U1+O2-U3+").unwrap();
    assert_eq!(g.diagram.crossing_signs(&g.orientation).as_slice(), &[1, -1, 1]);
}

#[test]
fn torus_link_components_are_the_transcribed_curves() {
    let src = data("torus_link.sld");
    let d = &src.diagram;
    assert_eq!((d.genus(), d.faces().count(), d.components().len()), (1, 3, 3));
    assert!(d.is_alternating());
    let comps = d.components();
    // J, K, L each pass through exactly two crossings
    for k in 0..3 {
        assert_eq!(comps.route(k).len(), 2);
    }
    assert_eq!((comps.over(0), comps.under(0)), (1, 0));
    assert_eq!((comps.over(1), comps.under(1)), (0, 2));
    assert_eq!((comps.over(2), comps.under(2)), (2, 1));
}

#[test]
fn split_union_sums_genus() {
    let vt = data("virtual_trefoil.sld").diagram;
    let u = vt.disjoint_union(&data("trefoil.sld").diagram).disjoint_union(&vt);
    assert!(u.is_split());
    assert_eq!(u.pieces().len(), 3);
    assert_eq!(u.genus(), 2);
    assert_eq!(u.genus(), oracle_genus(&u));
}

/// Gauss code with non-interleaved crossing labels built from a random
/// balanced bracket word.
fn nested_code() -> impl Strategy<Value = String> {
    (1usize..=7)
        .prop_flat_map(|n| {
            (Just(n), prop::collection::vec(any::<bool>(), 2 * n), prop::collection::vec(any::<(bool, bool)>(), n))
        })
        .prop_map(|(n, coins, labels)| {
            // bracket word: open while allowed, biased by the coins
            let mut open = Vec::new();
            let mut next = 0;
            let mut word = Vec::new();
            for &coin in &coins {
                if word.len() == 2 * n {
                    break;
                }
                let remaining = 2 * n - word.len();
                let must_close = open.len() == remaining;
                if next < n && !must_close && (coin || open.is_empty()) {
                    open.push(next);
                    word.push(next);
                    next += 1;
                } else {
                    word.push(open.pop().unwrap());
                }
            }
            while let Some(x) = open.pop() {
                word.push(x);
            }
            let mut seen = vec![false; n];
            let mut code = String::new();
            for x in word {
                let (over_first, positive) = labels[x];
                let first = !seen[x];
                seen[x] = true;
                let letter = if over_first == first { 'O' } else { 'U' };
                code.push_str(&format!("{letter}{}{}", x + 1, if positive { '+' } else { '-' }));
            }
            code
        })
}

proptest! {
    #[test]
    fn structural_invariants(d in any_diagram(9)) {
        let faces = d.faces();
        prop_assert_eq!(faces.lengths().iter().sum::<usize>(), 4 * d.crossing_count());
        let mut hits = vec![0; d.dart_count()];
        for boundary in faces.iter() {
            for &h in boundary {
                hits[h] += 1;
            }
        }
        prop_assert!(hits.iter().all(|&n| n == 1));
        // every undirected edge is seen twice across all boundaries
        for (a, b) in d.edges() {
            let (a, b) = (a.dart(), b.dart());
            prop_assert_eq!(d.mate(a), b);
            prop_assert_eq!(d.mate(b), a);
        }
        prop_assert_eq!(d.edge_count(), 2 * d.crossing_count());
        prop_assert_eq!(d.genus(), oracle_genus(&d));
        prop_assert_eq!(d.pieces().len(), piece_count(&d));
        prop_assert_eq!(faces.count(), mirror_face_count(&d));
    }

    #[test]
    fn faces_follow_rotation(d in any_diagram(8)) {
        let faces = d.faces();
        for h in 0..d.dart_count() {
            prop_assert_eq!(faces.face_of(h), faces.face_of(rotate(d.mate(h))));
        }
    }

    #[test]
    fn components_partition_passages(d in any_diagram(8)) {
        let comps = d.components();
        let mut visits = vec![0; d.dart_count()];
        for k in 0..comps.len() {
            for &h in comps.route(k) {
                visits[h] += 1;
                visits[opposite(h)] += 1;
            }
        }
        prop_assert!(visits.iter().all(|&n| n == 1));
    }

    #[test]
    fn sld_round_trip(d in any_diagram(9), bits in any::<u64>()) {
        let o = LinkOrientation::from_bits(d.components().len(), bits);
        let text = to_sld(&d, Some(&o));
        let back = parse_sld(&text).unwrap();
        prop_assert_eq!(&back.diagram, &d);
        prop_assert_eq!(back.orientation(), o);
        prop_assert_eq!(to_sld(&back.diagram, None), to_sld(&d, None));
    }

    #[test]
    fn nested_gauss_codes_are_planar(code in nested_code()) {
        let g = from_virtual_gauss_code(&code).unwrap();
        prop_assert_eq!(g.diagram.genus(), 0, "{}", code);
        prop_assert_eq!(g.diagram.components().len(), 1);
    }

    #[test]
    fn relabeling_preserves_structure(
        d in any_diagram(8),
        seed in any::<u64>(),
    ) {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let c = d.crossing_count();
        let mut perm: Vec<usize> = (0..c).collect();
        perm.shuffle(&mut rng);
        let even: Vec<u8> = (0..c).map(|_| 2 * rng.gen_range(0..2u8)).collect();
        let any_turn: Vec<u8> = (0..c).map(|_| rng.gen_range(0..4u8)).collect();

        let e = d.relabel(&perm, &even);
        prop_assert_eq!(e.is_alternating(), d.is_alternating());
        prop_assert_eq!(e.genus(), d.genus());
        prop_assert_eq!(e.components().len(), d.components().len());

        let t = d.relabel(&perm, &any_turn);
        prop_assert_eq!(t.genus(), d.genus());
        prop_assert_eq!(t.faces().count(), d.faces().count());
        prop_assert_eq!(t.pieces().len(), d.pieces().len());
    }

    #[test]
    fn switching_every_crossing_negates_signs(d in any_diagram(8), bits in any::<u64>()) {
        let c = d.crossing_count();
        let ident: Vec<usize> = (0..c).collect();
        let m = d.relabel(&ident, &vec![1; c]);
        prop_assert_eq!(m.is_alternating(), d.is_alternating());
        let (dc, mc) = (d.components(), m.components());
        let o = LinkOrientation::from_bits(dc.len(), bits);
        // orient each strand of the mirror the way it ran before the switch
        let reversed = (0..mc.len())
            .map(|k| {
                let h = mc.route(k)[0];
                let before = 4 * (h / 4) + (h % 4 + 3) % 4;
                mc.is_forward(h) != dc.is_outgoing(before, &o)
            })
            .collect();
        let mo = LinkOrientation::from_reversed(reversed);
        let (s, t) = (d.crossing_signs(&o), m.crossing_signs(&mo));
        for x in 0..c {
            prop_assert_eq!(t.sign(x), -s.sign(x));
        }
    }

    #[test]
    fn reversing_one_component_flips_mixed_crossings(d in any_diagram(8), bits in any::<u64>(), k in any::<prop::sample::Index>()) {
        let comps = d.components();
        let o = LinkOrientation::from_bits(comps.len(), bits);
        let k = k.index(comps.len());
        let mut r = o.clone();
        r.reverse(k);
        let (s, t) = (d.crossing_signs(&o), d.crossing_signs(&r));
        for x in 0..d.crossing_count() {
            let mixed = (comps.over(x) == k) != (comps.under(x) == k);
            prop_assert_eq!(t.sign(x), if mixed { -s.sign(x) } else { s.sign(x) });
        }
    }
}
