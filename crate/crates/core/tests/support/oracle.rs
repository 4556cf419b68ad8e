//! Straight-from-the-definitions class computations on raw bitmasks.
//!
//! Nothing here touches `Ladder`; every family is a `Vec<bool>` indexed by
//! subset bits and every closure is a plain fold over a family.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hstar::FiniteSpace;

pub struct Naive {
    pub n: usize,
    pub full: u64,
    pub classes: BTreeMap<&'static str, Vec<bool>>,
}

fn sub(a: u64, b: u64) -> bool {
    a & !b == 0
}

impl Naive {
    fn family(&self, name: &str) -> &[bool] {
        &self.classes[name]
    }

    /// Intersection of the supersets of `a` in `name`.
    pub fn hull(&self, name: &str, a: u64) -> u64 {
        let fam = self.family(name);
        (0..=self.full)
            .filter(|&f| fam[f as usize] && sub(a, f))
            .fold(self.full, |acc, f| acc & f)
    }

    /// `op(A) ⊆ U` for every `U ⊇ A` in `guard`, where `op` is the hull in
    /// `closed_class`.
    fn guarded(&self, closed_class: &str, guard: &str, a: u64) -> bool {
        let h = self.hull(closed_class, a);
        let g = self.family(guard);
        (0..=self.full).all(|u| !g[u as usize] || !sub(a, u) || sub(h, u))
    }

    fn complements(&self, name: &str) -> Vec<bool> {
        let fam = self.family(name);
        (0..=self.full).map(|a| fam[(self.full & !a) as usize]).collect()
    }

    fn add(&mut self, name: &'static str, fam: Vec<bool>) {
        self.classes.insert(name, fam);
    }

    fn add_guarded(&mut self, closed: &'static str, open: &'static str, hull_of: &str, guard: &str) {
        let fam = (0..=self.full).map(|a| self.guarded(hull_of, guard, a)).collect();
        self.add(closed, fam);
        let dual = self.complements(closed);
        self.add(open, dual);
    }

    /// `U ⊆ A ⊆ hull(U)` for some regular open `U`.
    fn sandwich(&self, hull_of: &str) -> Vec<bool> {
        let ro = self.family("regular-open");
        (0..=self.full)
            .map(|a| {
                (0..=self.full)
                    .any(|u| ro[u as usize] && sub(u, a) && sub(a, self.hull(hull_of, u)))
            })
            .collect()
    }

    pub fn new(space: &FiniteSpace) -> Naive {
        let n = space.n();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut me = Naive {
            n,
            full,
            classes: BTreeMap::new(),
        };
        let mut open = vec![false; 1 << n];
        for u in space.opens() {
            open[u.bits() as usize] = true;
        }
        me.add("open", open);
        let closed = me.complements("open");
        me.add("closed", closed);

        let cl = |me: &Naive, a: u64| me.hull("closed", a);
        let int = |me: &Naive, a: u64| full & !me.hull("closed", full & !a);
        let all = |me: &Naive, p: &dyn Fn(&Naive, u64) -> bool| -> Vec<bool> {
            (0..=full).map(|a| p(me, a)).collect()
        };

        let f = all(&me, &|m, a| int(m, cl(m, a)) == a);
        me.add("regular-open", f);
        let f = all(&me, &|m, a| cl(m, int(m, a)) == a);
        me.add("regular-closed", f);
        let f = all(&me, &|m, a| sub(a, cl(m, int(m, a))));
        me.add("semi-open", f);
        let f = all(&me, &|m, a| sub(int(m, cl(m, a)), a));
        me.add("semi-closed", f);
        let f = all(&me, &|m, a| sub(cl(m, int(m, cl(m, a))), a));
        me.add("alpha-closed", f);
        let f = me.complements("alpha-closed");
        me.add("alpha-open", f);
        let f = all(&me, &|m, a| int(m, cl(m, int(m, a))) == int(m, a));
        me.add("alpha*-set", f);
        let mut cset = vec![false; 1 << n];
        for u in 0..=full {
            for v in 0..=full {
                if me.family("open")[u as usize] && me.family("alpha*-set")[v as usize] {
                    cset[(u & v) as usize] = true;
                }
            }
        }
        me.add("C-set", cset);

        me.add_guarded("w-closed", "w-open", "closed", "semi-open");
        me.add_guarded("h-closed", "h-open", "semi-closed", "w-open");
        me.add_guarded("gh-closed", "gh-open", "h-closed", "h-open");
        let f = me.sandwich("h-closed");
        me.add("regular-h-open", f);
        let f = me.complements("regular-h-open");
        me.add("regular-h-closed", f);
        me.add_guarded("rgh-closed", "rgh-open", "h-closed", "regular-h-open");
        me.add_guarded("hCg-closed", "hCg-open", "h-closed", "C-set");
        me.add_guarded("H*-closed", "H*-open", "h-closed", "hCg-open");
        me.add_guarded("g-closed", "g-open", "closed", "open");
        me.add_guarded("gH*-closed", "gH*-open", "H*-closed", "H*-open");
        me.add_guarded("H*g-closed", "H*g-open", "H*-closed", "open");
        let f = me.sandwich("H*-closed");
        me.add("regular-H*-open", f);
        let f = me.complements("regular-H*-open");
        me.add("regular-H*-closed", f);
        me.add_guarded("rgH*-closed", "rgH*-open", "H*-closed", "regular-H*-open");
        me
    }

    pub fn has(&self, name: &str, a: u64) -> bool {
        self.family(name)[a as usize]
    }
}

/// Names of the classes defined by a guard, closed form first.
pub const GUARDED: [&str; 10] = [
    "w-closed",
    "h-closed",
    "gh-closed",
    "rgh-closed",
    "hCg-closed",
    "H*-closed",
    "g-closed",
    "gH*-closed",
    "H*g-closed",
    "rgH*-closed",
];
