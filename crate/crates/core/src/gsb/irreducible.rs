//! Enumeration of words that avoid every leading monomial.

use crate::gsb::relation::RelationSet;
use crate::word::{Letter, NaWord};

/// Irreducible words of lengths `1..=max_len`, grouped by length and sorted.
///
/// A word is irreducible iff both factors are irreducible and the word
/// itself is not a leading monomial, so the enumeration only ever combines
/// irreducible factors.
pub fn irreducible_words(relations: &RelationSet, max_len: usize) -> Vec<Vec<NaWord>> {
    let mut by_len: Vec<Vec<NaWord>> = Vec::with_capacity(max_len);
    if max_len == 0 {
        return by_len;
    }
    by_len.push(
        (0..relations.alphabet_size() as u32)
            .map(|r| NaWord::leaf(Letter(r)))
            .filter(|w| !relations.is_leading(w))
            .collect(),
    );
    for n in 2..=max_len {
        let mut level = Vec::new();
        for right_len in 1..n {
            let left_len = n - right_len;
            for r in &by_len[right_len - 1] {
                for l in &by_len[left_len - 1] {
                    let w = NaWord::node(l.clone(), r.clone());
                    if !relations.is_leading(&w) {
                        level.push(w);
                    }
                }
            }
        }
        by_len.push(level);
    }
    by_len
}

pub fn irreducible_counts(relations: &RelationSet, max_len: usize) -> Vec<usize> {
    irreducible_words(relations, max_len)
        .iter()
        .map(Vec::len)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gsb::relation::{Family, RelationSchema};
    use crate::word::words_by_length;

    #[test]
    fn zinbiel_irreducibles_are_left_combs() {
        for d in 1..=3 {
            let set = RelationSet::with_schemas(d, [RelationSchema::Family(Family::Zinbiel)]);
            let irr = irreducible_words(&set, 5);
            for (i, level) in irr.iter().enumerate() {
                assert_eq!(level.len(), d.pow(i as u32 + 1));
                assert!(level.iter().all(NaWord::is_left_comb));
            }
        }
    }

    #[test]
    fn matches_brute_force_subtree_scan() {
        let set = RelationSet::with_schemas(2, [RelationSchema::Family(Family::Zinbiel)]);
        let irr = irreducible_words(&set, 5);
        for (level, all) in irr.iter().zip(words_by_length(2, 5)) {
            let brute: Vec<NaWord> = all.into_iter().filter(|w| !set.is_reducible(w)).collect();
            assert_eq!(level, &brute);
        }
    }
}
