use std::collections::HashMap;

use super::FreeComplex;
use crate::algebra::{FreeElement, FreeModule, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{preimage, quotient_length, SubmoduleBasis};
use crate::module::{GradedModule, ParameterSequence};

/// `K_•(a; M)` as a complex of covers `F ⊗ Λ^k` together with the module
/// `M = F/N`, so that `K_k = (F ⊗ Λ^k)/(N ⊗ Λ^k)`.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    module: GradedModule,
    elements: Vec<Polynomial>,
    cover: FreeComplex,
}

/// Subsets of `0..d` of size `k`, as bitmasks in lexicographic order.
fn subsets(d: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, d: usize, k: usize, cur: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..d {
            if d - i >= k {
                rec(i + 1, d, k - 1, cur | 1 << i, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(0, d, k, 0, &mut out);
    out
}

pub fn koszul_complex(seq: &ParameterSequence, m: &GradedModule) -> Result<KoszulComplex> {
    let elems = seq.elements().to_vec();
    let d = elems.len();
    let field = *m.field();
    let f = m.ambient();
    let r = f.rank();
    let degs: Vec<i32> = elems.iter().map(|a| a.degree().unwrap_or(0) as i32).collect();
    let spots: Vec<Vec<u32>> = (0..=d).map(|k| subsets(d, k)).collect();
    let mut modules = Vec::with_capacity(d + 1);
    for sets in &spots {
        let mut twists = Vec::with_capacity(sets.len() * r);
        for &s in sets {
            let shift: i32 = (0..d).filter(|&i| s >> i & 1 == 1).map(|i| degs[i]).sum();
            twists.extend(f.twists().iter().map(|t| t + shift));
        }
        modules.push(FreeModule::new(twists));
    }
    let mut maps = Vec::with_capacity(d);
    for k in 1..=d {
        let lower: HashMap<u32, usize> = spots[k - 1].iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut images = Vec::with_capacity(spots[k].len() * r);
        for &s in &spots[k] {
            for c in 0..r {
                let mut v = FreeElement::zero();
                let mut sign_pos = 0;
                for i in 0..d {
                    if s >> i & 1 == 0 {
                        continue;
                    }
                    let block = lower[&(s & !(1 << i))];
                    let mut a = elems[i].clone();
                    if sign_pos % 2 == 1 {
                        a = a.neg(&field);
                    }
                    v = v.add(&FreeElement::from_polynomial(&a, block * r + c), &field);
                    sign_pos += 1;
                }
                images.push(v);
            }
        }
        maps.push(images);
    }
    Ok(KoszulComplex {
        module: m.clone(),
        elements: elems,
        cover: FreeComplex::new(modules, maps)?,
    })
}

impl KoszulComplex {
    pub fn cover(&self) -> &FreeComplex {
        &self.cover
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    fn relations(&self, k: usize) -> Result<SubmoduleBasis> {
        let n = self.module.relations();
        let r = n.ambient().rank();
        let copies = self.cover.module(k).rank() / r.max(1);
        let mut gens = Vec::with_capacity(copies * n.gb_len());
        for b in 0..copies {
            gens.extend(n.gb().into_iter().map(|g| g.shift_components(b * r)));
        }
        SubmoduleBasis::new(self.cover.module(k).clone(), gens, *n.field())
    }

    /// `Z_k` and `B_k + N ⊗ Λ^k` inside the cover of `K_k`.
    pub fn cycles_and_boundaries(&self, k: usize) -> Result<(SubmoduleBasis, SubmoduleBasis)> {
        let field = *self.module.field();
        let fk = self.cover.module(k).clone();
        let rel = self.relations(k)?;
        let z = if k == 0 {
            SubmoduleBasis::whole(fk.clone(), field)
        } else {
            let below = self.relations(k - 1)?;
            preimage(&fk, self.cover.differential(k), &below)?
        };
        let b = if k < self.cover.len() {
            rel.extend(self.cover.differential(k + 1).to_vec())?
        } else {
            rel
        };
        Ok((z, b))
    }

    pub fn homology_length(&self, k: usize) -> Result<i128> {
        let (z, b) = self.cycles_and_boundaries(k)?;
        quotient_length(&z, &b, self.module.nvars())
    }
}

/// `ℓ(H_i(a; M))` for `i = 0..d`.
pub fn koszul_homology_lengths(seq: &ParameterSequence, m: &GradedModule) -> Result<Vec<i128>> {
    let q = m.quotient_by_ideal(seq.elements())?;
    if q.dimension().is_some_and(|d| d > 0) {
        return Err(Error::InfiniteLength("the ideal is not primary to the maximal ideal on the module".into()));
    }
    let k = koszul_complex(seq, m)?;
    (0..=seq.len()).map(|i| k.homology_length(i)).collect()
}
