//! Closure-operator laws and open/closed duality, checked on one space.

#![allow(dead_code)]

use hstar::{ClosureOpId, FamilyId, Ladder, Subset};

/// Number of individual law checks made on `ladder`, or the first violation.
pub fn check(ladder: &Ladder) -> Result<usize, String> {
    let space = ladder.space();
    let full = space.full();
    let empty = space.empty();
    let subsets: Vec<Subset> = ladder.subsets().collect();
    let mut count = 0;
    let mut ensure = |ok: bool, what: &dyn Fn() -> String| {
        count += 1;
        if ok {
            Ok(())
        } else {
            Err(format!("{}: {:?}", what(), space))
        }
    };

    ensure(ladder.cl(empty) == empty, &|| "cl(∅) ≠ ∅".into())?;
    ensure(ladder.int(full) == full, &|| "int(X) ≠ X".into())?;
    for &a in &subsets {
        let c = ladder.cl(a);
        ensure(a.is_subset_of(c), &|| format!("cl not extensive at {a}"))?;
        ensure(ladder.cl(c) == c, &|| format!("cl not idempotent at {a}"))?;
        ensure(space.is_closed(c), &|| format!("cl({a}) not closed"))?;
        ensure(ladder.int(a) == ladder.cl(a.complement()).complement(), &|| {
            format!("int/cl duality fails at {a}")
        })?;
        for &b in &subsets {
            ensure(ladder.cl(a.union(b)) == c.union(ladder.cl(b)), &|| {
                format!("cl not additive at {a}, {b}")
            })?;
        }
        for op in ClosureOpId::ALL {
            let h = ladder.derived_closure(a, op);
            ensure(a.is_subset_of(h), &|| format!("{} not extensive at {a}", op.name()))?;
            ensure(ladder.derived_closure(h, op) == h, &|| {
                format!("{} not idempotent at {a}", op.name())
            })?;
            ensure(h.is_subset_of(ladder.cl(a)), &|| format!("{} exceeds cl at {a}", op.name()))?;
            ensure(
                ladder.derived_interior(a, op) == ladder.derived_closure(a.complement(), op).complement(),
                &|| format!("{} interior duality fails at {a}", op.name()),
            )?;
            for &b in &subsets {
                if a.is_subset_of(b) {
                    ensure(h.is_subset_of(ladder.derived_closure(b, op)), &|| {
                        format!("{} not monotone at {a} ⊆ {b}", op.name())
                    })?;
                }
            }
        }
    }
    for &f in FamilyId::ALL {
        if f.is_self_paired() {
            continue;
        }
        let dual = ladder.extent(f.dual());
        for &a in &subsets {
            ensure(ladder.contains(f, a) == dual.contains(a.complement()), &|| {
                format!("{f} / {} duality fails at {a}", f.dual())
            })?;
        }
    }
    Ok(count)
}
