use std::cmp::Reverse;
use std::collections::BTreeMap;

use crate::algebra::free::{axpy, sort_terms};
use crate::algebra::{FreeModule, ModuleOrder, Monomial, PrimeField, Term, TermKey};

/// Leading-term lookup for a list of monic elements.
#[derive(Clone, Debug, Default)]
pub(crate) struct Reducer {
    by_comp: Vec<Vec<(Monomial, u32, usize)>>,
}

impl Reducer {
    pub fn new(rank: usize) -> Self {
        Reducer {
            by_comp: vec![Vec::new(); rank],
        }
    }

    pub fn build(rank: usize, elems: &[Vec<Term>]) -> Self {
        let mut r = Reducer::new(rank);
        for (i, e) in elems.iter().enumerate() {
            r.insert(&e[0], i);
        }
        r
    }

    pub fn insert(&mut self, lead: &Term, idx: usize) {
        self.by_comp[lead.comp as usize].push((lead.mon, lead.mon.support_mask(), idx));
    }

    #[inline]
    pub fn find(&self, t: &Term) -> Option<usize> {
        let mask = t.mon.support_mask();
        self.by_comp[t.comp as usize]
            .iter()
            .find(|(m, mm, _)| mm & !mask == 0 && m.divides(&t.mon))
            .map(|&(_, _, i)| i)
    }
}

/// Fully reduces `f` (sorted under `order`) against monic `elems`.
pub(crate) fn reduce(
    f: Vec<Term>,
    elems: &[Vec<Term>],
    reducer: &Reducer,
    order: &ModuleOrder,
    field: &PrimeField,
) -> Vec<Term> {
    if f.is_empty() {
        return f;
    }
    // skip the accumulator while the leading terms are irreducible
    let first = match f.iter().position(|t| reducer.find(t).is_some()) {
        None => return f,
        Some(i) => i,
    };
    let mut out: Vec<Term> = f[..first].to_vec();
    let mut acc: BTreeMap<TermKey, u32> = f[first..].iter().map(|t| (order.key(t), t.coef)).collect();
    while let Some((key, c)) = acc.pop_last() {
        let t = key.term(c);
        match reducer.find(&t) {
            None => out.push(t),
            Some(g) => {
                let g = &elems[g];
                let q = g[0].mon.quotient_of(&t.mon).expect("reducer divides");
                let neg = field.neg(c);
                for s in &g[1..] {
                    let k = order.key(&Term {
                        mon: s.mon.mul(&q),
                        comp: s.comp,
                        coef: 0,
                    });
                    let d = field.mul(s.coef, neg);
                    match acc.entry(k) {
                        std::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(d);
                        }
                        std::collections::btree_map::Entry::Occupied(mut o) => {
                            let v = field.add(*o.get(), d);
                            if v == 0 {
                                o.remove();
                            } else {
                                *o.get_mut() = v;
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn make_monic(mut f: Vec<Term>, field: &PrimeField) -> Vec<Term> {
    let c = f[0].coef;
    if c != 1 {
        let inv = field.inv(c).expect("nonzero leading coefficient");
        for t in f.iter_mut() {
            t.coef = field.mul(t.coef, inv);
        }
    }
    f
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: i32,
}

/// Input of a Buchberger run on a graded free module.
pub(crate) struct GbInput<'a> {
    pub ambient: &'a FreeModule,
    pub order: ModuleOrder,
    pub field: PrimeField,
    /// A Gröbner basis under `order`; pairs among seeds are skipped.
    pub seeds: Vec<Vec<Term>>,
    pub gens: Vec<Vec<Term>>,
    pub degree_limit: Option<i32>,
}

pub(crate) struct GbOutput {
    /// Reduced basis sorted by ascending leading term.
    pub basis: Vec<Vec<Term>>,
    /// Indices of the generators that were not redundant.
    pub minimal: Vec<usize>,
}

struct State<'a> {
    ambient: &'a FreeModule,
    order: ModuleOrder,
    field: PrimeField,
    product: bool,
    elems: Vec<Vec<Term>>,
    active: Vec<bool>,
    reducer: Reducer,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lead(&self, i: usize) -> &Term {
        &self.elems[i][0]
    }

    fn degree_of(&self, t: &Term) -> i32 {
        self.ambient.term_degree(t)
    }

    /// Gebauer-Möller update for a new element `h`.
    fn insert(&mut self, f: Vec<Term>) {
        let h = self.elems.len();
        let lh = f[0];
        self.elems.push(f);
        self.active.push(true);
        self.reducer.insert(&lh, h);

        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for g in 0..h {
            if !self.active[g] || self.lead(g).comp != lh.comp {
                continue;
            }
            let lg = self.lead(g).mon;
            cands.push((g, lg.lcm(&lh.mon), self.product && lg.is_coprime(&lh.mon)));
        }
        // chain criterion among the new pairs
        let mut keep: Vec<(usize, Monomial, bool)> = Vec::new();
        for k in 0..cands.len() {
            let (g, l, coprime) = cands[k];
            let dominated = !coprime
                && (cands[k + 1..].iter().any(|(_, l2, _)| l2.divides(&l))
                    || keep.iter().any(|(_, l2, _)| l2.divides(&l)));
            if !dominated {
                keep.push((g, l, coprime));
            }
        }
        // old pairs made redundant by h
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if elems[p.i][0].comp != lh.comp || !lh.mon.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i][0].mon.lcm(&lh.mon);
            let lj = elems[p.j][0].mon.lcm(&lh.mon);
            li == p.lcm || lj == p.lcm
        });
        for (g, l, coprime) in keep {
            if coprime {
                continue;
            }
            let deg = l.degree() as i32 + self.ambient.twist(lh.comp as usize);
            self.pairs.push(Pair { i: g, j: h, lcm: l, deg });
        }
        for g in 0..h {
            if self.active[g] && self.lead(g).comp == lh.comp && lh.mon.divides(&self.lead(g).mon) {
                self.active[g] = false;
            }
        }
    }

    fn spoly(&self, p: &Pair) -> Vec<Term> {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let qa = a[0].mon.quotient_of(&p.lcm).unwrap();
        let qb = b[0].mon.quotient_of(&p.lcm).unwrap();
        let left = axpy(&[], 1, &qa, &a[1..], &self.field, &self.order);
        axpy(&left, self.field.neg(1), &qb, &b[1..], &self.field, &self.order)
    }

    fn reduce(&self, f: Vec<Term>) -> Vec<Term> {
        reduce(f, &self.elems, &self.reducer, &self.order, &self.field)
    }
}

/// Buchberger's algorithm with normal selection, processing one degree
/// at a time so that redundant generators are detected exactly.
pub(crate) fn groebner(input: GbInput<'_>) -> GbOutput {
    let GbInput {
        ambient,
        order,
        field,
        seeds,
        gens,
        degree_limit,
    } = input;
    let product = ambient.rank() == 1 && order.split == u32::MAX;
    let mut st = State {
        ambient,
        order,
        field,
        product,
        elems: Vec::new(),
        active: Vec::new(),
        reducer: Reducer::new(ambient.rank()),
        pairs: Vec::new(),
    };
    for s in seeds {
        if s.is_empty() {
            continue;
        }
        let s = make_monic(s, &field);
        let i = st.elems.len();
        st.reducer.insert(&s[0], i);
        st.elems.push(s);
        st.active.push(true);
    }

    let mut queue: Vec<(i32, usize, Vec<Term>)> = gens
        .into_iter()
        .enumerate()
        .filter(|(_, g)| !g.is_empty())
        .map(|(i, g)| (st.degree_of(&g[0]), i, g))
        .collect();
    queue.sort_by_key(|(d, i, _)| (Reverse(*d), Reverse(*i)));

    let mut minimal = Vec::new();
    loop {
        let next_pair = st.pairs.iter().map(|p| p.deg).min();
        let next_gen = queue.last().map(|(d, _, _)| *d);
        let deg = match (next_pair, next_gen) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if degree_limit.is_some_and(|l| deg > l) {
            break;
        }
        let (mut now, rest): (Vec<Pair>, Vec<Pair>) = std::mem::take(&mut st.pairs).into_iter().partition(|p| p.deg == deg);
        st.pairs = rest;
        now.sort_by(|a, b| a.lcm.cmp(&b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))));
        for p in now {
            // a pair may have been superseded by an insertion in this degree
            let s = st.spoly(&p);
            let r = st.reduce(s);
            if !r.is_empty() {
                st.insert(make_monic(r, &field));
            }
        }
        while queue.last().is_some_and(|(d, _, _)| *d == deg) {
            let (_, idx, g) = queue.pop().unwrap();
            let r = st.reduce(g);
            if !r.is_empty() {
                minimal.push(idx);
                st.insert(make_monic(r, &field));
            }
        }
    }

    let mut basis: Vec<Vec<Term>> = st
        .elems
        .iter()
        .zip(&st.active)
        .filter(|(_, &a)| a)
        .map(|(e, _)| e.clone())
        .collect();
    basis.sort_by_key(|e| order.key(&e[0]));
    let reducer = Reducer::build(ambient.rank(), &basis);
    for k in 0..basis.len() {
        let tail = basis[k][1..].to_vec();
        if tail.iter().any(|t| reducer.find(t).is_some()) {
            let red = reduce(tail, &basis, &reducer, &order, &field);
            let lead = basis[k][0];
            basis[k] = std::iter::once(lead).chain(red).collect();
        }
    }
    minimal.sort_unstable();
    GbOutput { basis, minimal }
}

/// Checks the Buchberger criterion: every S-pair reduces to zero.
pub(crate) fn is_groebner(basis: &[Vec<Term>], ambient: &FreeModule, order: &ModuleOrder, field: &PrimeField) -> bool {
    let reducer = Reducer::build(ambient.rank(), basis);
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (a, b) = (&basis[i], &basis[j]);
            if a[0].comp != b[0].comp {
                continue;
            }
            let l = a[0].mon.lcm(&b[0].mon);
            let qa = a[0].mon.quotient_of(&l).unwrap();
            let qb = b[0].mon.quotient_of(&l).unwrap();
            let ca = field.inv(a[0].coef).unwrap();
            let cb = field.neg(field.inv(b[0].coef).unwrap());
            let s = axpy(&axpy(&[], ca, &qa, &a[1..], field, order), cb, &qb, &b[1..], field, order);
            if !reduce(s, basis, &reducer, order, field).is_empty() {
                return false;
            }
        }
    }
    true
}

pub(crate) fn sorted(mut terms: Vec<Term>, order: &ModuleOrder) -> Vec<Term> {
    sort_terms(&mut terms, order);
    terms
}
