//! Every condition instance is ± one block of an axiom of the unified product, and
//! every live block is accounted for by a condition, a side condition or an implied axiom.

use std::collections::BTreeMap;

use zinbiel2::conditions::audit::{audit, audit_text};
use zinbiel2::conditions::{conditions, ListId};

const SEEDS: std::ops::Range<u64> = 0..8;

fn all_v(block: &str) -> bool {
    let inner = &block[block.find('[').unwrap() + 1..block.find('→').unwrap()];
    inner.split(',').all(|k| k == "V") && block.ends_with("→V]")
}

/// φ(x·y) = φ(x)·φ(y) follows from φ(x)⊳y = x·y and φ(x⊳y) = x·φ(y).
fn implied(list: ListId, block: &str) -> bool {
    block.starts_with("CM5")
        || (list == ListId::ZZ && block == "ZIN1[V,V,V→V]")
        || (matches!(list, ListId::CZ | ListId::BZ) && all_v(block))
}

#[test]
fn corrected_conditions_are_axiom_blocks() {
    for list in ListId::ALL {
        let mut live: BTreeMap<(String, Option<String>), bool> = BTreeMap::new();
        for seed in SEEDS {
            let a = audit(list, seed);
            for r in a.rows.iter().filter(|r| !r.printed) {
                assert!(r.vacuous || !r.matches.is_empty(), "{list:?} {} {:?} seed {seed}", r.id, r.label);
                *live.entry((r.id.clone(), r.label.clone())).or_default() |= !r.vacuous;
            }
            for b in &a.uncovered {
                assert!(implied(list, b), "{list:?} block {b} has no condition (seed {seed})");
            }
        }
        let dead: Vec<_> = live.into_iter().filter(|(_, l)| !l).map(|(k, _)| k.0).collect();
        // σ = 0 in a matched pair.
        let expect: &[&str] = if list == ListId::BZ { &["BZ103", "BZ85", "BZ91", "BZ97"] } else { &[] };
        assert_eq!(dead, expect, "{list:?}");
    }
}

#[test]
fn printed_suspects_do_not_match() {
    let mut unmatched = Vec::new();
    for list in ListId::ALL {
        for seed in SEEDS {
            for r in audit(list, seed).rows.iter().filter(|r| r.printed && !r.vacuous && r.matches.is_empty()) {
                unmatched.push(r.id.clone());
            }
        }
    }
    unmatched.sort();
    unmatched.dedup();
    assert_eq!(unmatched, ["ZZ19"]);
    let fixed: Vec<_> = ListId::ALL
        .iter()
        .flat_map(|&l| conditions(l))
        .filter(|c| c.fix.is_some())
        .map(|c| c.id)
        .collect();
    assert_eq!(fixed.len(), 12);
}

#[test]
fn dropped_term_is_detected() {
    // Z9 without its ω term is no longer an axiom block.
    let full = "( ui ->i xi) <-i wi+ omi( ui <|i xi,wi) = ui ->i ( xi <-i wi+wi ->i xi )+ omi(ui, wi <|i xi + xi |>i wi)";
    let cut = "( ui ->i xi) <-i wi = ui ->i ( xi <-i wi+wi ->i xi )+ omi(ui, wi <|i xi + xi |>i wi)";
    assert!(audit_text(full, 3).unwrap().iter().all(|(m, _)| !m.is_empty()));
    assert!(audit_text(cut, 3).unwrap().iter().all(|(m, _)| m.is_empty()));
}
