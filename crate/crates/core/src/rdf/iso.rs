use std::collections::{BTreeMap, BTreeSet};

use super::term::{Subject, Term, Triple};

fn blanks(g: &BTreeSet<Triple>) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for t in g {
        if let Subject::Blank(b) = &t.subject {
            out.insert(b.clone());
        }
        if let Term::Blank(b) = &t.object {
            out.insert(b.clone());
        }
    }
    out
}

fn is_ground(t: &Triple) -> bool {
    !matches!(t.subject, Subject::Blank(_)) && !matches!(t.object, Term::Blank(_))
}

/// One round of colour refinement: a blank node's new colour is its old
/// colour plus the multiset of its statements with blanks replaced by colours.
fn refine(
    g: &BTreeSet<Triple>,
    colours: &BTreeMap<String, usize>,
    palette: &mut BTreeMap<String, usize>,
) -> BTreeMap<String, usize> {
    let show_subject = |s: &Subject| match s {
        Subject::Iri(i) => format!("<{i}>"),
        Subject::Blank(b) => format!("#{}", colours[b]),
    };
    let show_object = |o: &Term| match o {
        Term::Blank(b) => format!("#{}", colours[b]),
        other => format!("{other:?}"),
    };
    let mut signatures: BTreeMap<String, Vec<String>> = colours
        .iter()
        .map(|(b, c)| (b.clone(), vec![format!("c{c}")]))
        .collect();
    for t in g {
        if let Subject::Blank(b) = &t.subject {
            signatures
                .get_mut(b)
                .unwrap()
                .push(format!("out {} {}", t.predicate, show_object(&t.object)));
        }
        if let Term::Blank(b) = &t.object {
            signatures
                .get_mut(b)
                .unwrap()
                .push(format!("in {} {}", show_subject(&t.subject), t.predicate));
        }
    }
    signatures
        .into_iter()
        .map(|(b, mut sig)| {
            sig.sort();
            let key = sig.join("|");
            let next = palette.len();
            (b, *palette.entry(key).or_insert(next))
        })
        .collect()
}

fn relabel(g: &BTreeSet<Triple>, map: &BTreeMap<String, String>) -> BTreeSet<Triple> {
    g.iter()
        .map(|t| Triple {
            subject: match &t.subject {
                Subject::Blank(b) => Subject::Blank(map[b].clone()),
                s => s.clone(),
            },
            predicate: t.predicate.clone(),
            object: match &t.object {
                Term::Blank(b) => Term::Blank(map[b].clone()),
                o => o.clone(),
            },
        })
        .collect()
}

/// Whether two triple sets are equal up to a renaming of blank nodes.
pub fn isomorphic(a: &BTreeSet<Triple>, b: &BTreeSet<Triple>) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let ground_a: BTreeSet<_> = a.iter().filter(|t| is_ground(t)).collect();
    let ground_b: BTreeSet<_> = b.iter().filter(|t| is_ground(t)).collect();
    if ground_a != ground_b {
        return false;
    }
    let blanks_a = blanks(a);
    let blanks_b = blanks(b);
    if blanks_a.len() != blanks_b.len() {
        return false;
    }

    let mut palette = BTreeMap::new();
    let mut ca: BTreeMap<String, usize> = blanks_a.iter().map(|x| (x.clone(), 0)).collect();
    let mut cb: BTreeMap<String, usize> = blanks_b.iter().map(|x| (x.clone(), 0)).collect();
    for _ in 0..=blanks_a.len() {
        let na = refine(a, &ca, &mut palette);
        let nb = refine(b, &cb, &mut palette);
        let classes = |c: &BTreeMap<String, usize>| c.values().collect::<BTreeSet<_>>().len();
        let stable = classes(&na) == classes(&ca) && classes(&nb) == classes(&cb);
        ca = na;
        cb = nb;
        if stable {
            break;
        }
    }
    let histogram = |c: &BTreeMap<String, usize>| {
        let mut h: BTreeMap<usize, usize> = BTreeMap::new();
        for v in c.values() {
            *h.entry(*v).or_default() += 1;
        }
        h
    };
    if histogram(&ca) != histogram(&cb) {
        return false;
    }

    // Backtrack over same-coloured candidates; refinement leaves few ties.
    let order: Vec<&String> = blanks_a.iter().collect();
    let mut map = BTreeMap::new();
    let mut used = BTreeSet::new();
    #[allow(clippy::too_many_arguments)]
    fn search<'x>(
        i: usize,
        order: &[&'x String],
        ca: &BTreeMap<String, usize>,
        cb: &'x BTreeMap<String, usize>,
        map: &mut BTreeMap<String, String>,
        used: &mut BTreeSet<&'x String>,
        a: &BTreeSet<Triple>,
        b: &BTreeSet<Triple>,
    ) -> bool {
        if i == order.len() {
            return &relabel(a, map) == b;
        }
        let colour = ca[order[i]];
        for (cand, c) in cb {
            if *c != colour || used.contains(cand) {
                continue;
            }
            map.insert(order[i].clone(), cand.clone());
            used.insert(cand);
            if search(i + 1, order, ca, cb, map, used, a, b) {
                return true;
            }
            used.remove(cand);
        }
        map.remove(order[i]);
        false
    }
    search(0, &order, &ca, &cb, &mut map, &mut used, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::Iri;

    fn t(s: &str, o: &str) -> Triple {
        let term = |x: &str| match x.strip_prefix("_:") {
            Some(b) => Term::Blank(b.into()),
            None => Term::Iri(Iri::new(format!("http://x/{x}")).unwrap()),
        };
        Triple::from_terms(term(s), Iri::lb("p").into(), term(o)).unwrap()
    }

    #[test]
    fn renaming_is_invisible() {
        let a = BTreeSet::from([t("_:a", "m"), t("r", "_:a"), t("_:b", "n"), t("r", "_:b")]);
        let b = BTreeSet::from([t("_:y", "n"), t("r", "_:y"), t("_:x", "m"), t("r", "_:x")]);
        assert!(isomorphic(&a, &b));
        let c = BTreeSet::from([t("_:y", "n"), t("r", "_:y"), t("_:x", "n"), t("r", "_:x")]);
        assert!(!isomorphic(&a, &c));
    }

    #[test]
    fn symmetric_cycles_need_search() {
        let a = BTreeSet::from([t("_:a", "_:b"), t("_:b", "_:c"), t("_:c", "_:a")]);
        let b = BTreeSet::from([t("_:z", "_:x"), t("_:x", "_:y"), t("_:y", "_:z")]);
        assert!(isomorphic(&a, &b));
        let two = BTreeSet::from([t("_:a", "_:b"), t("_:b", "_:a"), t("_:c", "_:c")]);
        assert!(!isomorphic(&a, &two));
    }
}
