//! Maya diagrams, flips, translations and the block structure of cyclic diagrams.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Finite description of a Maya diagram: filled levels are the negative
/// integers not listed together with the non-negative integers listed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct MayaDiagram {
    entries: Vec<i64>,
}

impl TryFrom<Vec<i64>> for MayaDiagram {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self, Error> {
        MayaDiagram::new(v)
    }
}

impl From<MayaDiagram> for Vec<i64> {
    fn from(d: MayaDiagram) -> Vec<i64> {
        d.entries
    }
}

impl MayaDiagram {
    /// Entries must be strictly increasing.
    pub fn new(entries: Vec<i64>) -> Result<Self, Error> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidStructure(format!(
                "diagram entries must be strictly increasing: {entries:?}"
            )));
        }
        Ok(MayaDiagram { entries })
    }

    pub fn empty() -> Self {
        MayaDiagram::default()
    }

    /// Sorted entries of an arbitrary set.
    pub fn from_set(mut entries: Vec<i64>) -> Result<Self, Error> {
        entries.sort_unstable();
        Self::new(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.entries.binary_search(&n).is_ok()
    }

    /// All entries positive, so level 0 is empty and every negative level filled.
    pub fn is_canonical(&self) -> bool {
        self.entries.first().is_none_or(|&e| e >= 1)
    }

    pub fn is_filled(&self, n: i64) -> bool {
        (n < 0) != self.contains(n)
    }

    /// `(0, ..., k-1) ∪ (N + k)`; `k = 0` is the identity.
    pub fn translate(&self, k: usize) -> MayaDiagram {
        let k = k as i64;
        let mut v: Vec<i64> = (0..k).collect();
        v.extend(self.entries.iter().map(|e| e + k));
        MayaDiagram { entries: v }
    }

    /// Toggles level `nu`: removes it when present, inserts it otherwise.
    pub fn flip_at(&self, nu: i64) -> MayaDiagram {
        let mut v = self.entries.clone();
        match v.binary_search(&nu) {
            Ok(i) => {
                v.remove(i);
            }
            Err(i) => v.insert(i, nu),
        }
        MayaDiagram { entries: v }
    }

    /// `-1` on a filled level, `+1` on an empty one.
    pub fn spin_at(&self, n: i64) -> i8 {
        if self.is_filled(n) {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Removes repeated pairs and translates so that level 0 is the first empty level.
///
/// Returns the canonical diagram and the translation applied to the levels.
pub fn canonicalize(raw: &[i64]) -> (MayaDiagram, i64) {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in raw {
        *counts.entry(x).or_default() += 1;
    }
    let set: Vec<i64> = counts
        .into_iter()
        .filter(|(_, c)| c % 2 == 1)
        .map(|(x, _)| x)
        .collect();
    let d = MayaDiagram { entries: set };
    let first_neg_empty = d.entries.iter().copied().find(|&x| x < 0);
    let first_pos_empty = (0..).find(|&j| !d.contains(j)).unwrap();
    let f = first_neg_empty.map_or(first_pos_empty, |n| n.min(first_pos_empty));
    let hi = d.entries.last().copied().unwrap_or(0).max(0);
    let entries = (f..=hi).filter(|&j| d.is_filled(j)).map(|j| j - f).collect();
    (MayaDiagram { entries }, -f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    /// Empties a filled level.
    #[serde(rename = "+")]
    Positive,
    /// Fills an empty level.
    #[serde(rename = "-")]
    Negative,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flip {
    pub level: i64,
    pub sign: Sign,
}

/// Ordered flips, signed by their effect when replayed on the source diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlipChain {
    pub flips: Vec<Flip>,
}

impl FlipChain {
    /// Signs each level by replaying the flips in order on `source`.
    pub fn from_levels(source: &MayaDiagram, levels: &[i64]) -> FlipChain {
        let mut d = source.clone();
        let mut flips = Vec::with_capacity(levels.len());
        for &l in levels {
            let sign = if d.contains(l) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            flips.push(Flip { level: l, sign });
            d = d.flip_at(l);
        }
        FlipChain { flips }
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn levels(&self) -> Vec<i64> {
        self.flips.iter().map(|f| f.level).collect()
    }

    pub fn replay(&self, source: &MayaDiagram) -> MayaDiagram {
        self.flips.iter().fold(source.clone(), |d, f| d.flip_at(f.level))
    }

    pub fn negatives(&self) -> usize {
        self.flips.iter().filter(|f| f.sign == Sign::Negative).count()
    }

    pub fn positives(&self) -> usize {
        self.flips.iter().filter(|f| f.sign == Sign::Positive).count()
    }

    /// `negatives - positives = k` and `k ≡ p (mod 2)`.
    pub fn satisfies_count_rule(&self, k: usize) -> bool {
        self.negatives() as i64 - self.positives() as i64 == k as i64 && (self.len() + k).is_multiple_of(2)
    }

    /// Sorted levels, for multiset comparison.
    pub fn multiset(&self) -> Vec<i64> {
        let mut v = self.levels();
        v.sort_unstable();
        v
    }

    /// Reorders by `perm`, where entry `i` of the result is entry `perm[i]`
    /// of `self`, and re-signs against `source`.
    pub fn permuted(&self, source: &MayaDiagram, perm: &[usize]) -> Result<FlipChain, Error> {
        check_permutation(perm, self.len())?;
        let levels: Vec<i64> = perm.iter().map(|&i| self.flips[i].level).collect();
        Ok(FlipChain::from_levels(source, &levels))
    }
}

pub(crate) fn check_permutation(perm: &[usize], p: usize) -> Result<(), Error> {
    let mut seen = vec![false; p];
    if perm.len() != p {
        return Err(Error::InvalidPermutation(format!(
            "expected {p} entries, got {}",
            perm.len()
        )));
    }
    for &i in perm {
        if i >= p || seen[i] {
            return Err(Error::InvalidPermutation(format!("{perm:?}")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// `(r, r+k, ..., r+(s-1)k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub r: i64,
    pub s: usize,
    pub k: usize,
}

impl Block {
    pub fn expand(&self) -> Vec<i64> {
        (0..self.s as i64).map(|i| self.r + i * self.k as i64).collect()
    }

    /// First level past the block in its stride class.
    pub fn end(&self) -> i64 {
        self.r + (self.s * self.k) as i64
    }
}

/// How the blocks of a cyclic structure interact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Degeneracy {
    None,
    /// Blocks touch, so some flip level occurs twice.
    Merge,
    /// Blocks share levels, which cancel pairwise.
    Overlap,
}

/// Translation `k`, Okamoto lengths and second-type blocks of a cyclic diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawStructure", into = "RawStructure")]
pub struct CyclicStructure {
    k: usize,
    okamoto: Vec<usize>,
    second_type: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawStructure {
    k: usize,
    okamoto: Vec<usize>,
    blocks: Vec<[usize; 2]>,
}

impl TryFrom<RawStructure> for CyclicStructure {
    type Error = Error;
    fn try_from(r: RawStructure) -> Result<Self, Error> {
        CyclicStructure::new(r.k, r.okamoto, r.blocks.iter().map(|b| (b[0], b[1])).collect())
    }
}

impl From<CyclicStructure> for RawStructure {
    fn from(c: CyclicStructure) -> Self {
        RawStructure {
            k: c.k,
            okamoto: c.okamoto,
            blocks: c.second_type.iter().map(|&(l, m)| [l, m]).collect(),
        }
    }
}

impl CyclicStructure {
    pub fn new(k: usize, okamoto: Vec<usize>, second_type: Vec<(usize, usize)>) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidStructure("k must be at least 1".into()));
        }
        if okamoto.len() != k - 1 {
            return Err(Error::InvalidStructure(format!(
                "expected {} Okamoto lengths, got {}",
                k - 1,
                okamoto.len()
            )));
        }
        if second_type.iter().any(|&(l, m)| l == 0 || m == 0) {
            return Err(Error::InvalidStructure(
                "second-type blocks need lambda >= 1 and mu >= 1".into(),
            ));
        }
        Ok(CyclicStructure { k, okamoto, second_type })
    }

    /// The harmonic oscillator itself: `k = 1`, no blocks.
    pub fn trivial() -> Self {
        CyclicStructure {
            k: 1,
            okamoto: vec![],
            second_type: vec![],
        }
    }

    /// Pure `k`-Okamoto structure.
    pub fn okamoto(lengths: Vec<usize>) -> Result<Self, Error> {
        Self::new(lengths.len() + 1, lengths, vec![])
    }

    /// Stride-1 structure of generalized Hermite blocks.
    pub fn gh(blocks: Vec<(usize, usize)>) -> Result<Self, Error> {
        Self::new(1, vec![], blocks)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn okamoto_lengths(&self) -> &[usize] {
        &self.okamoto
    }

    pub fn second_type(&self) -> &[(usize, usize)] {
        &self.second_type
    }

    /// `p = k + 2j`.
    pub fn period(&self) -> usize {
        self.k + 2 * self.second_type.len()
    }

    /// Non-empty blocks: Okamoto blocks first, then second-type blocks.
    pub fn blocks(&self) -> Vec<Block> {
        let mut v: Vec<Block> = self
            .okamoto
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| Block {
                r: i as i64 + 1,
                s: a,
                k: self.k,
            })
            .collect();
        v.extend(self.second_type.iter().map(|&(l, m)| Block {
            r: l as i64,
            s: m,
            k: self.k,
        }));
        v
    }

    /// Flip levels in the default order: Okamoto ends, then each
    /// `λ_i, λ_i + μ_i k`, then 0.
    pub fn flip_levels(&self) -> Vec<i64> {
        let k = self.k as i64;
        let mut v: Vec<i64> = self
            .okamoto
            .iter()
            .enumerate()
            .map(|(i, &a)| i as i64 + 1 + a as i64 * k)
            .collect();
        for &(l, m) in &self.second_type {
            v.push(l as i64);
            v.push(l as i64 + m as i64 * k);
        }
        v.push(0);
        v
    }

    pub fn degeneracy(&self) -> Degeneracy {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for b in self.blocks() {
            for x in b.expand() {
                *counts.entry(x).or_default() += 1;
            }
        }
        if counts.values().any(|&c| c > 1) {
            return Degeneracy::Overlap;
        }
        let mut levels = self.flip_levels();
        levels.sort_unstable();
        if levels.windows(2).any(|w| w[0] == w[1]) {
            return Degeneracy::Merge;
        }
        Degeneracy::None
    }

    pub fn is_degenerate(&self) -> bool {
        self.degeneracy() != Degeneracy::None
    }
}

impl fmt::Display for CyclicStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} okamoto={:?} blocks={:?}", self.k, self.okamoto, self.second_type)
    }
}

/// Expands all blocks, cancelling repeated levels pairwise.
pub fn build_diagram(cs: &CyclicStructure) -> (MayaDiagram, bool) {
    let levels: Vec<i64> = cs.blocks().iter().flat_map(|b| b.expand()).collect();
    let (d, _) = xor_set(&levels);
    (d, cs.is_degenerate())
}

fn xor_set(levels: &[i64]) -> (MayaDiagram, usize) {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in levels {
        *counts.entry(x).or_default() += 1;
    }
    let cancelled = counts.values().filter(|&&c| c % 2 == 0).count();
    let entries = counts
        .into_iter()
        .filter(|(_, c)| c % 2 == 1)
        .map(|(x, _)| x)
        .collect();
    (MayaDiagram { entries }, cancelled)
}

/// The chain of the structure in default order, signed by replay.
///
/// Merging blocks are accepted, since the flips still realize the
/// translation; overlapping blocks are rejected.
pub fn flip_chain_of(cs: &CyclicStructure) -> Result<FlipChain, Error> {
    if cs.degeneracy() == Degeneracy::Overlap {
        return Err(Error::DegenerateStructure);
    }
    let (d, _) = build_diagram(cs);
    Ok(FlipChain::from_levels(&d, &cs.flip_levels()))
}

/// Minimal chain from `d` to `d ⊕ k`: a flip sits at `ν` exactly when the
/// spins at `ν - k` and `ν` differ.
pub fn minimal_flip_chain(d: &MayaDiagram, k: usize) -> FlipChain {
    let k = k as i64;
    let hi = d.entries().last().copied().unwrap_or(0).max(0) + k;
    let mut levels = Vec::new();
    for l in 0..k {
        let mut nu = l;
        while nu <= hi {
            if d.spin_at(nu - k) != d.spin_at(nu) {
                levels.push(nu);
            }
            nu += k;
        }
    }
    levels.sort_unstable();
    FlipChain::from_levels(d, &levels)
}

/// `d ∪ (d + k) ∪ (0..k-1)` as a flip chain realizing `d ↦ d ⊕ k`.
pub fn trivial_flip_chain(d: &MayaDiagram, k: usize) -> FlipChain {
    let mut levels: Vec<i64> = d.entries().to_vec();
    levels.extend(d.entries().iter().map(|e| e + k as i64));
    levels.extend(0..k as i64);
    FlipChain::from_levels(d, &levels)
}

/// All structures of period `p` and translation `k` with parameters up to `bound`,
/// in lexicographic order of `(okamoto..., λ_1, μ_1, ...)`.
pub fn enumerate_structures(p: usize, k: usize, bound: usize) -> Result<Vec<CyclicStructure>, Error> {
    if k == 0 || k > p || !(p - k).is_multiple_of(2) {
        return Err(Error::InvalidParity { p, k });
    }
    let j = (p - k) / 2;
    let mut ranges: Vec<(usize, usize)> = vec![(0, bound); k - 1];
    ranges.extend(std::iter::repeat_n((1, bound), 2 * j));
    let mut out = Vec::new();
    let mut cur: Vec<usize> = ranges.iter().map(|r| r.0).collect();
    if ranges.iter().any(|r| r.0 > r.1) {
        return Ok(out);
    }
    loop {
        let okamoto = cur[..k - 1].to_vec();
        let st = cur[k - 1..].chunks(2).map(|c| (c[0], c[1])).collect();
        out.push(CyclicStructure::new(k, okamoto, st)?);
        let mut i = cur.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                for t in i + 1..cur.len() {
                    cur[t] = ranges[t].0;
                }
                break;
            }
        }
    }
}

/// Pair of Maya diagrams: extended-spectrum indices and shadow indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniversalCharacter {
    #[serde(rename = "N")]
    pub first: MayaDiagram,
    #[serde(rename = "L")]
    pub second: MayaDiagram,
}

impl UniversalCharacter {
    pub fn new(first: MayaDiagram, second: MayaDiagram) -> Self {
        UniversalCharacter { first, second }
    }

    pub fn flip(&self, slot: Slot, level: i64) -> UniversalCharacter {
        match slot {
            Slot::First => UniversalCharacter::new(self.first.flip_at(level), self.second.clone()),
            Slot::Second => UniversalCharacter::new(self.first.clone(), self.second.flip_at(level)),
        }
    }

    pub fn translate(&self, k1: usize, k2: usize) -> UniversalCharacter {
        UniversalCharacter::new(self.first.translate(k1), self.second.translate(k2))
    }
}

impl fmt::Display for UniversalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.first, self.second)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlotFlip {
    pub slot: Slot,
    pub level: i64,
    pub sign: Sign,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlotFlipChain {
    pub flips: Vec<SlotFlip>,
}

impl SlotFlipChain {
    pub fn from_levels(source: &UniversalCharacter, levels: &[(Slot, i64)]) -> SlotFlipChain {
        let mut uc = source.clone();
        let mut flips = Vec::with_capacity(levels.len());
        for &(slot, level) in levels {
            let d = match slot {
                Slot::First => &uc.first,
                Slot::Second => &uc.second,
            };
            let sign = if d.contains(level) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            flips.push(SlotFlip { slot, level, sign });
            uc = uc.flip(slot, level);
        }
        SlotFlipChain { flips }
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn replay(&self, source: &UniversalCharacter) -> UniversalCharacter {
        self.flips
            .iter()
            .fold(source.clone(), |uc, f| uc.flip(f.slot, f.level))
    }

    pub fn permuted(&self, source: &UniversalCharacter, perm: &[usize]) -> Result<SlotFlipChain, Error> {
        check_permutation(perm, self.len())?;
        let levels: Vec<(Slot, i64)> = perm
            .iter()
            .map(|&i| (self.flips[i].slot, self.flips[i].level))
            .collect();
        Ok(SlotFlipChain::from_levels(source, &levels))
    }
}

/// Universal character of two structures with equal translation and its
/// chain: first-slot flips, then second-slot flips.
pub fn uc_flip_chain(
    cs1: &CyclicStructure,
    cs2: &CyclicStructure,
) -> Result<(UniversalCharacter, SlotFlipChain), Error> {
    if cs1.k != cs2.k {
        return Err(Error::AmplitudeMismatch(cs1.k, cs2.k));
    }
    if cs1.degeneracy() == Degeneracy::Overlap || cs2.degeneracy() == Degeneracy::Overlap {
        return Err(Error::DegenerateStructure);
    }
    let uc = UniversalCharacter::new(build_diagram(cs1).0, build_diagram(cs2).0);
    let mut levels: Vec<(Slot, i64)> = cs1.flip_levels().into_iter().map(|l| (Slot::First, l)).collect();
    levels.extend(cs2.flip_levels().into_iter().map(|l| (Slot::Second, l)));
    let chain = SlotFlipChain::from_levels(&uc, &levels);
    Ok((uc, chain))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[i64]) -> MayaDiagram {
        MayaDiagram::new(v.to_vec()).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(&[-1, 0, 2]), (md(&[1, 3]), 1));
        assert_eq!(canonicalize(&[1, 3]), (md(&[1, 3]), 0));
        assert_eq!(canonicalize(&[2, 2, 5]), (md(&[5]), 0));
        assert_eq!(canonicalize(&[0, 1, 3]), (md(&[1]), -2));
        assert_eq!(canonicalize(&[]), (md(&[]), 0));
    }

    #[test]
    fn translate_examples() {
        assert_eq!(md(&[1, 3]).translate(2), md(&[0, 1, 3, 5]));
        assert_eq!(md(&[]).translate(1), md(&[0]));
        assert_eq!(md(&[1, 2]).translate(3), md(&[0, 1, 2, 4, 5]));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(md(&[2, 3]).flip_at(2), md(&[3]));
        assert_eq!(md(&[2, 3]).flip_at(0), md(&[0, 2, 3]));
        let c = FlipChain::from_levels(&md(&[2, 3]), &[2, 4, 0]);
        assert_eq!(c.replay(&md(&[2, 3])), md(&[2, 3]).translate(1));
    }

    #[test]
    fn spin_examples() {
        let d = md(&[1, 3]);
        assert_eq!(d.spin_at(-5), -1);
        assert_eq!(d.spin_at(0), 1);
        assert_eq!(d.spin_at(3), -1);
    }

    #[test]
    fn build_examples() {
        let gh = CyclicStructure::gh(vec![(2, 2)]).unwrap();
        assert_eq!(build_diagram(&gh), (md(&[2, 3]), false));
        let ok = CyclicStructure::okamoto(vec![1, 1]).unwrap();
        assert_eq!(build_diagram(&ok), (md(&[1, 2]), false));
        let over = CyclicStructure::gh(vec![(1, 2), (2, 1)]).unwrap();
        assert_eq!(build_diagram(&over), (md(&[1]), true));
        assert_eq!(over.degeneracy(), Degeneracy::Overlap);
    }

    #[test]
    fn flip_chain_examples() {
        let gh = CyclicStructure::gh(vec![(2, 2)]).unwrap();
        let c = flip_chain_of(&gh).unwrap();
        assert_eq!(
            c.flips,
            vec![
                Flip { level: 2, sign: Sign::Positive },
                Flip { level: 4, sign: Sign::Negative },
                Flip { level: 0, sign: Sign::Negative },
            ]
        );
        let ok = CyclicStructure::okamoto(vec![1, 1]).unwrap();
        let c = flip_chain_of(&ok).unwrap();
        assert_eq!(c.levels(), vec![4, 5, 0]);
        assert_eq!(c.negatives(), 3);
        assert_eq!(c.replay(&md(&[1, 2])), md(&[1, 2]).translate(3));
        let z = CyclicStructure::okamoto(vec![0, 0, 0, 0]).unwrap();
        let c = flip_chain_of(&z).unwrap();
        assert_eq!(c.levels(), vec![1, 2, 3, 4, 0]);
        assert_eq!(c.replay(&md(&[])), md(&[0, 1, 2, 3, 4]));
        let over = CyclicStructure::gh(vec![(1, 2), (2, 1)]).unwrap();
        assert_eq!(flip_chain_of(&over), Err(Error::DegenerateStructure));
    }

    #[test]
    fn minimal_chain_examples() {
        assert_eq!(minimal_flip_chain(&md(&[2, 3]), 1).levels(), vec![0, 2, 4]);
        assert_eq!(minimal_flip_chain(&md(&[]), 1).levels(), vec![0]);
        assert_eq!(minimal_flip_chain(&md(&[1, 3]), 2).levels(), vec![0, 5]);
    }

    #[test]
    fn enumerate_examples() {
        let one = enumerate_structures(1, 1, 5).unwrap();
        assert_eq!(one, vec![CyclicStructure::trivial()]);
        assert_eq!(enumerate_structures(3, 3, 1).unwrap().len(), 4);
        assert_eq!(enumerate_structures(3, 1, 2).unwrap().len(), 4);
        assert_eq!(enumerate_structures(3, 2, 1), Err(Error::InvalidParity { p: 3, k: 2 }));
        assert_eq!(enumerate_structures(1, 3, 1), Err(Error::InvalidParity { p: 1, k: 3 }));
    }

    #[test]
    fn uc_examples() {
        let (uc, c) = uc_flip_chain(
            &CyclicStructure::gh(vec![(1, 2)]).unwrap(),
            &CyclicStructure::trivial(),
        )
        .unwrap();
        assert_eq!(uc, UniversalCharacter::new(md(&[1, 2]), md(&[])));
        let lv: Vec<(Slot, i64)> = c.flips.iter().map(|f| (f.slot, f.level)).collect();
        assert_eq!(
            lv,
            vec![(Slot::First, 1), (Slot::First, 3), (Slot::First, 0), (Slot::Second, 0)]
        );
        let (uc, c) = uc_flip_chain(&CyclicStructure::trivial(), &CyclicStructure::trivial()).unwrap();
        assert_eq!(uc, UniversalCharacter::default());
        assert_eq!(c.len(), 2);
        let a = CyclicStructure::okamoto(vec![2]).unwrap();
        let b = CyclicStructure::okamoto(vec![1]).unwrap();
        let (_, c) = uc_flip_chain(&a, &b).unwrap();
        let lv: Vec<i64> = c.flips.iter().map(|f| f.level).collect();
        assert_eq!(lv, vec![5, 0, 3, 0]);
        assert_eq!(
            uc_flip_chain(&a, &CyclicStructure::trivial()),
            Err(Error::AmplitudeMismatch(2, 1))
        );
    }

    #[test]
    fn serde_shapes() {
        let cs = CyclicStructure::new(3, vec![1, 0], vec![(4, 1)]).unwrap();
        let uc = UniversalCharacter::new(md(&[1, 2]), md(&[]));
        let (a, b) = (
            serde_json::to_string(&cs).unwrap(),
            serde_json::to_string(&uc).unwrap(),
        );
        assert_eq!(a, r#"{"k":3,"okamoto":[1,0],"blocks":[[4,1]]}"#);
        assert_eq!(b, r#"{"N":[1,2],"L":[]}"#);
        assert_eq!(serde_json::from_str::<CyclicStructure>(&a).unwrap(), cs);
        assert!(serde_json::from_str::<MayaDiagram>("[3,1]").is_err());
    }
}
