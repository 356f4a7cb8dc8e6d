//! Tournaments: complete orientations of the pairs of `n` players.
//!
//! A tournament encodes an invariant almost complex structure on `F(n)`:
//! player `i` beating player `j` (`i -> j`) means `epsilon(i, j) = +1`.
//! Players are 1-based in every public signature.
//!
//! The text form is `"n:bits"`: the upper triangle of the orientation in
//! row-major order, pairs `(1,2), (1,3), .., (1,n), (2,3), .., (n-1,n)`, with
//! bit `1` meaning `i -> j` for `i < j`. Census files depend on this order.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::isoclass;

/// Largest supported player count.
pub const MAX_PLAYERS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("tournament code must look like \"n:bits\"")]
    MissingSeparator,
    #[error("invalid player count {0:?}")]
    BadPlayerCount(String),
    #[error("player count {0} is outside 2..=16")]
    PlayerCountOutOfRange(usize),
    #[error("expected {expected} orientation bits for n = {n}, found {found} (offending index {index})")]
    Length {
        n: usize,
        expected: usize,
        found: usize,
        index: usize,
    },
    #[error("character {found:?} at bit index {index} is not 0 or 1")]
    BadBit { index: usize, found: char },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("player {player} is out of range 1..={n}")]
    PlayerOutOfRange { player: usize, n: usize },
    #[error("players must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("need at least {min} players, got {got}")]
    TooFewPlayers { min: usize, got: usize },
    #[error("size mismatch: {left} vs {right} players")]
    SizeMismatch { left: usize, right: usize },
}

/// Component type of a triple `i < j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleClass {
    /// The 3-subtournament is a 3-cycle.
    Cyclic,
    Transitive,
}

/// The four isomorphism classes of 4-tournaments, told apart by sorted scores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FourClass {
    /// Scores `{0,1,2,3}`.
    Transitive,
    /// Scores `{1,1,2,2}`; strongly connected (irreducible).
    Strong,
    /// Scores `{1,1,1,3}`: a source dominating a 3-cycle.
    SourceOverCycle,
    /// Scores `{0,2,2,2}`: a 3-cycle dominating a sink.
    CycleOverSink,
}

impl FourClass {
    pub const ALL: [FourClass; 4] = [
        FourClass::Transitive,
        FourClass::Strong,
        FourClass::SourceOverCycle,
        FourClass::CycleOverSink,
    ];

    /// The two classes whose presence rules out every (1,2)-symplectic metric.
    pub fn is_forbidden(self) -> bool {
        matches!(self, FourClass::SourceOverCycle | FourClass::CycleOverSink)
    }

    pub fn from_sorted_scores(scores: [usize; 4]) -> Option<FourClass> {
        match scores {
            [0, 1, 2, 3] => Some(FourClass::Transitive),
            [1, 1, 2, 2] => Some(FourClass::Strong),
            [1, 1, 1, 3] => Some(FourClass::SourceOverCycle),
            [0, 2, 2, 2] => Some(FourClass::CycleOverSink),
            _ => None,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Counts of 4-subtournament classes over all 4-subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourProfile {
    counts: [usize; 4],
    /// Lexicographically first 4-subset inducing a forbidden class.
    pub witness: Option<[usize; 4]>,
}

impl FourProfile {
    pub fn count(&self, class: FourClass) -> usize {
        self.counts[class.index()]
    }

    pub fn forbidden_count(&self) -> usize {
        self.count(FourClass::SourceOverCycle) + self.count(FourClass::CycleOverSink)
    }

    pub fn has_forbidden(&self) -> bool {
        self.witness.is_some()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Out-degrees, one entry per player in label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoreVector(pub Vec<usize>);

impl ScoreVector {
    pub fn sorted(&self) -> Vec<usize> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Complete orientation of the pairs of `n <= 16` players.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tournament {
    n: u8,
    // out[i] has bit j set iff player i beats player j (0-based)
    out: [u16; MAX_PLAYERS],
}

impl Tournament {
    /// Builds a tournament from a predicate deciding, for 0-based `i < j`,
    /// whether `i` beats `j`.
    pub(crate) fn from_upper(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Tournament {
        assert!((1..=MAX_PLAYERS).contains(&n));
        let mut out = [0u16; MAX_PLAYERS];
        for i in 0..n {
            for j in i + 1..n {
                if beats(i, j) {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
            }
        }
        Tournament { n: n as u8, out }
    }

    /// Builds a tournament from a 1-based predicate `beats(i, j)` consulted for `i < j`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Result<Tournament, Error> {
        if !(2..=MAX_PLAYERS).contains(&n) {
            return Err(Error::TooFewPlayers { min: 2, got: n });
        }
        Ok(Self::from_upper(n, |i, j| beats(i + 1, j + 1)))
    }

    /// The canonical (transitive) tournament: `i -> j` iff `i < j`.
    pub fn canonical(n: usize) -> Tournament {
        Self::from_upper(n, |_, _| true)
    }

    /// Reference parabolic tournament: for `i < j`, `i -> j` iff `j - i` is odd.
    pub fn parabolic(n: usize) -> Tournament {
        Self::from_upper(n, |i, j| (j - i) % 2 == 1)
    }

    /// Parses the `"n:bits"` code.
    pub fn parse(code: &str) -> Result<Tournament, ParseError> {
        let (head, bits) = code.split_once(':').ok_or(ParseError::MissingSeparator)?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| ParseError::BadPlayerCount(head.into()))?;
        if !(2..=MAX_PLAYERS).contains(&n) {
            return Err(ParseError::PlayerCountOutOfRange(n));
        }
        let bits = bits.trim();
        let expected = n * (n - 1) / 2;
        for (index, c) in bits.chars().enumerate() {
            if index >= expected {
                break;
            }
            if c != '0' && c != '1' {
                return Err(ParseError::BadBit { index, found: c });
            }
        }
        let found = bits.chars().count();
        if found != expected {
            return Err(ParseError::Length {
                n,
                expected,
                found,
                index: found.min(expected),
            });
        }
        let bytes = bits.as_bytes();
        let mut idx = 0;
        Ok(Self::from_upper(n, |_, _| {
            let b = bytes[idx] == b'1';
            idx += 1;
            b
        }))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Number of unordered pairs, `n(n-1)/2`.
    pub fn pair_count(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }

    /// `true` iff `i -> j` (1-based).
    pub fn beats(&self, i: usize, j: usize) -> bool {
        self.beats0(i - 1, j - 1)
    }

    #[inline]
    pub(crate) fn beats0(&self, i: usize, j: usize) -> bool {
        self.out[i] >> j & 1 == 1
    }

    #[inline]
    pub(crate) fn out_mask(&self, i: usize) -> u16 {
        self.out[i]
    }

    /// Skew sign `epsilon(i, j)`: `+1` if `i -> j`, `-1` if `j -> i`, `0` on the diagonal.
    pub fn epsilon(&self, i: usize, j: usize) -> i8 {
        if i == j {
            0
        } else if self.beats(i, j) {
            1
        } else {
            -1
        }
    }

    /// Orientation bits in encoding order.
    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        let n = self.n();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| self.beats0(i, j)))
    }

    /// The `"n:bits"` code.
    pub fn code(&self) -> String {
        let mut s = String::with_capacity(self.pair_count() + 3);
        s.push_str(&alloc::format!("{}:", self.n));
        s.extend(self.bits().map(|b| if b { '1' } else { '0' }));
        s
    }

    /// Relabels player `i` as `perm[i - 1]`; `perm` is a 1-based permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tournament, Error> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::SizeMismatch { left: n, right: perm.len() });
        }
        let mut seen = 0u32;
        for &p in perm {
            if p == 0 || p > n || seen >> p & 1 == 1 {
                return Err(Error::PlayerOutOfRange { player: p, n });
            }
            seen |= 1 << p;
        }
        Ok(self.relabel0(|i| perm[i] - 1))
    }

    pub(crate) fn relabel0(&self, map: impl Fn(usize) -> usize) -> Tournament {
        let n = self.n();
        let mut out = [0u16; MAX_PLAYERS];
        for i in 0..n {
            for j in 0..n {
                if self.beats0(i, j) {
                    out[map(i)] |= 1 << map(j);
                }
            }
        }
        Tournament { n: self.n, out }
    }

    /// Every arc reversed.
    pub fn reversed(&self) -> Tournament {
        Self::from_upper(self.n(), |i, j| !self.beats0(i, j))
    }

    pub fn score_vector(&self) -> ScoreVector {
        ScoreVector((0..self.n()).map(|i| self.out[i].count_ones() as usize).collect())
    }

    fn check_player(&self, p: usize) -> Result<(), Error> {
        if p == 0 || p > self.n() {
            Err(Error::PlayerOutOfRange { player: p, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Classifies the triple `i < j < k`.
    pub fn triple_class(&self, i: usize, j: usize, k: usize) -> Result<TripleClass, Error> {
        for p in [i, j, k] {
            self.check_player(p)?;
        }
        if !(i < j && j < k) {
            return Err(Error::NotStrictlyIncreasing);
        }
        Ok(self.triple_class0(i - 1, j - 1, k - 1))
    }

    #[inline]
    pub(crate) fn triple_class0(&self, i: usize, j: usize, k: usize) -> TripleClass {
        let ij = self.beats0(i, j);
        let jk = self.beats0(j, k);
        let ik = self.beats0(i, k);
        // cyclic iff (e_ij, e_jk, e_ik) is (+,+,-) or (-,-,+)
        if ij == jk && ik != ij {
            TripleClass::Cyclic
        } else {
            TripleClass::Transitive
        }
    }

    /// Number of cyclic triples, by direct enumeration.
    pub fn three_cycle_count(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.triple_class0(i, j, k) == TripleClass::Cyclic {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Number of cyclic triples from the score identity `C(n,3) - sum C(s_i, 2)`.
    pub fn three_cycle_count_from_scores(&self) -> usize {
        let n = self.n();
        let transitive: usize = self.score_vector().0.iter().map(|&s| s * s.saturating_sub(1) / 2).sum();
        n * (n - 1) * (n.saturating_sub(2)) / 6 - transitive
    }

    /// Restriction to the strictly increasing player subset `s`, relabelled `1..=|s|`.
    pub fn subtournament(&self, s: &[usize]) -> Result<Tournament, Error> {
        if s.len() < 2 {
            return Err(Error::TooFewPlayers { min: 2, got: s.len() });
        }
        for &p in s {
            self.check_player(p)?;
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing);
        }
        Ok(Self::from_upper(s.len(), |a, b| self.beats0(s[a] - 1, s[b] - 1)))
    }

    /// `true` iff there are no 3-cycles, i.e. the structure is integrable.
    pub fn is_transitive(&self) -> bool {
        self.three_cycle_count() == 0
    }

    /// Sorted scores equal `(0, 1, .., n-1)`.
    pub fn has_transitive_scores(&self) -> bool {
        self.score_vector().sorted().into_iter().enumerate().all(|(i, s)| i == s)
    }

    /// Every vertex reaches every other along arcs.
    pub fn is_strong(&self) -> bool {
        let n = self.n();
        let full: u32 = (1u32 << n) - 1;
        let reach = |forward: bool| {
            let mut seen: u32 = 1;
            let mut frontier: u32 = 1;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let next = if forward {
                    self.out[v] as u32
                } else {
                    !(self.out[v] as u32) & full & !(1 << v)
                };
                let fresh = next & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
            seen
        };
        reach(true) == full && reach(false) == full
    }

    /// A Hamiltonian cycle `c_1 -> c_2 -> .. -> c_n -> c_1` (1-based players,
    /// first player not repeated), or `None` if the tournament is not strong.
    ///
    /// Grows a cycle from a 3-cycle: an outside player with both an
    /// in-neighbour and an out-neighbour on the cycle is spliced in between
    /// consecutive cycle players; otherwise an arc from the set dominated by
    /// the cycle to the set dominating it extends the cycle by two.
    pub fn hamiltonian_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if n < 3 || !self.is_strong() {
            return None;
        }
        let mut cycle = self.first_three_cycle()?;
        let mut on_cycle: u32 = cycle.iter().fold(0, |m, &v| m | 1 << v);
        while cycle.len() < n {
            let outside = (0..n).filter(|&v| on_cycle >> v & 1 == 0);
            let mut spliced = false;
            let mut dominated = Vec::new(); // cycle -> v for every cycle player
            let mut dominating = Vec::new(); // v -> every cycle player
            for v in outside {
                let m = cycle.len();
                if let Some(pos) = (0..m).find(|&p| self.beats0(cycle[p], v) && self.beats0(v, cycle[(p + 1) % m])) {
                    cycle.insert(pos + 1, v);
                    on_cycle |= 1 << v;
                    spliced = true;
                    break;
                }
                if self.beats0(cycle[0], v) {
                    dominated.push(v);
                } else {
                    dominating.push(v);
                }
            }
            if spliced {
                continue;
            }
            let (b, a) = dominated
                .iter()
                .flat_map(|&b| dominating.iter().map(move |&a| (b, a)))
                .find(|&(b, a)| self.beats0(b, a))?;
            // c_1 -> b -> a -> c_2 -> .. -> c_m -> c_1
            cycle.insert(1, b);
            cycle.insert(2, a);
            on_cycle |= 1 << a | 1 << b;
        }
        Some(cycle.into_iter().map(|v| v + 1).collect())
    }

    fn first_three_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.triple_class0(i, j, k) == TripleClass::Cyclic {
                        return Some(if self.beats0(i, j) {
                            alloc::vec![i, j, k]
                        } else {
                            alloc::vec![i, k, j]
                        });
                    }
                }
            }
        }
        None
    }

    /// `true` iff an `n`-cycle exists (irreducible tournament).
    pub fn is_hamiltonian(&self) -> bool {
        self.n() >= 3 && self.is_strong()
    }

    /// Checks that `cycle` is a Hamiltonian cycle of this tournament.
    pub fn is_hamiltonian_cycle(&self, cycle: &[usize]) -> bool {
        let n = self.n();
        if cycle.len() != n {
            return false;
        }
        let mut seen = 0u32;
        for &p in cycle {
            if p == 0 || p > n || seen >> p & 1 == 1 {
                return false;
            }
            seen |= 1 << p;
        }
        (0..n).all(|p| self.beats(cycle[p], cycle[(p + 1) % n]))
    }

    /// `true` iff isomorphic to the reference parabolic tournament.
    pub fn is_parabolic(&self) -> bool {
        self.n() >= 3 && isoclass::canonical_code(self) == isoclass::canonical_code(&Self::parabolic(self.n()))
    }

    /// Classifies the 4-subtournament on the 0-based players `q`.
    pub(crate) fn four_class0(&self, q: [usize; 4]) -> FourClass {
        let mask: u16 = q.iter().fold(0, |m, &v| m | 1 << v);
        let mut scores = q.map(|v| (self.out[v] & mask).count_ones() as usize);
        scores.sort_unstable();
        FourClass::from_sorted_scores(scores).expect("every 4-tournament has one of four score multisets")
    }

    /// Classifies every 4-subtournament; records the first forbidden subset.
    pub fn four_subtournament_profile(&self) -> Result<FourProfile, Error> {
        let n = self.n();
        if n < 4 {
            return Err(Error::TooFewPlayers { min: 4, got: n });
        }
        let mut counts = [0usize; 4];
        let mut witness = None;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let class = self.four_class0([a, b, c, d]);
                        counts[class.index()] += 1;
                        if witness.is_none() && class.is_forbidden() {
                            witness = Some([a + 1, b + 1, c + 1, d + 1]);
                        }
                    }
                }
            }
        }
        Ok(FourProfile { counts, witness })
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({})", self.code())
    }
}

impl FromStr for Tournament {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tournament::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn arcs(t: &Tournament) -> Vec<(usize, usize)> {
        let n = t.n();
        let mut v = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i != j && t.beats(i, j) {
                    v.push((i, j));
                }
            }
        }
        v
    }

    #[test]
    fn decode_three_player_codes() {
        let t = Tournament::parse("3:111").unwrap();
        assert_eq!(t, Tournament::canonical(3));
        assert_eq!(arcs(&t), vec![(1, 2), (1, 3), (2, 3)]);

        // 1->2, 1->3, 3->2: transitive with scores (2,0,1)
        let t = Tournament::parse("3:110").unwrap();
        assert_eq!(arcs(&t), vec![(1, 2), (1, 3), (3, 2)]);
        assert_eq!(t.score_vector().0, vec![2, 0, 1]);
        assert!(t.is_transitive());

        // 1->2, 2->3, 3->1
        let t = Tournament::parse("3:101").unwrap();
        assert_eq!(arcs(&t), vec![(1, 2), (2, 3), (3, 1)]);
        assert_eq!(t.three_cycle_count(), 1);
    }

    #[test]
    fn parse_errors_name_the_index() {
        assert_eq!(
            Tournament::parse("4:11011"),
            Err(ParseError::Length { n: 4, expected: 6, found: 5, index: 5 })
        );
        assert_eq!(
            Tournament::parse("3:1x1"),
            Err(ParseError::BadBit { index: 1, found: 'x' })
        );
        assert_eq!(Tournament::parse("3111"), Err(ParseError::MissingSeparator));
        assert_eq!(Tournament::parse("1:"), Err(ParseError::PlayerCountOutOfRange(1)));
        assert_eq!(Tournament::parse("17:0"), Err(ParseError::PlayerCountOutOfRange(17)));
        assert!(matches!(Tournament::parse("a:0"), Err(ParseError::BadPlayerCount(_))));
        assert!(matches!(Tournament::parse("3:1111"), Err(ParseError::Length { index: 3, .. })));
    }

    #[test]
    fn code_round_trips() {
        for code in ["2:0", "3:101", "4:110111", "5:1011001110"] {
            assert_eq!(Tournament::parse(code).unwrap().code(), code);
        }
    }

    #[test]
    fn scores() {
        assert_eq!(Tournament::canonical(4).score_vector().0, vec![3, 2, 1, 0]);
        assert_eq!(Tournament::canonical(4).score_vector().sorted(), vec![0, 1, 2, 3]);
        assert_eq!(Tournament::parse("3:101").unwrap().score_vector().0, vec![1, 1, 1]);
    }

    #[test]
    fn triple_classes() {
        let t = Tournament::canonical(3);
        assert_eq!(t.triple_class(1, 2, 3), Ok(TripleClass::Transitive));
        let c = Tournament::parse("3:101").unwrap();
        assert_eq!(c.triple_class(1, 2, 3), Ok(TripleClass::Cyclic));
        assert_eq!(t.triple_class(1, 3, 2), Err(Error::NotStrictlyIncreasing));
        assert_eq!(t.triple_class(1, 2, 4), Err(Error::PlayerOutOfRange { player: 4, n: 3 }));
        assert_eq!(t.triple_class(0, 1, 2), Err(Error::PlayerOutOfRange { player: 0, n: 3 }));
    }

    #[test]
    fn strong_four_tournament_has_two_cycles() {
        // 1->2->3->4->1 with 1->3, 2->4
        let t = Tournament::from_fn(4, |i, j| !(i == 1 && j == 4)).unwrap();
        assert_eq!(t.score_vector().sorted(), vec![1, 1, 2, 2]);
        assert_eq!(t.three_cycle_count(), 2);
        assert_eq!(t.three_cycle_count_from_scores(), 2);
    }

    #[test]
    fn subtournaments() {
        let t = Tournament::canonical(5);
        assert_eq!(t.subtournament(&[2, 3, 5]).unwrap(), Tournament::canonical(3));
        assert_eq!(t.subtournament(&[1, 1, 2]), Err(Error::NotStrictlyIncreasing));
        assert_eq!(t.subtournament(&[1, 6]), Err(Error::PlayerOutOfRange { player: 6, n: 5 }));
        assert_eq!(t.subtournament(&[1]), Err(Error::TooFewPlayers { min: 2, got: 1 }));
    }

    #[test]
    fn hamiltonian() {
        let c = Tournament::parse("3:101").unwrap();
        assert_eq!(c.hamiltonian_cycle(), Some(vec![1, 2, 3]));
        for n in 3..=8 {
            assert!(!Tournament::canonical(n).is_hamiltonian());
            assert_eq!(Tournament::canonical(n).hamiltonian_cycle(), None);
            let p = Tournament::parabolic(n);
            let cyc = p.hamiltonian_cycle().unwrap();
            assert!(p.is_hamiltonian_cycle(&cyc));
        }
        assert!(!Tournament::canonical(2).is_hamiltonian());
    }

    #[test]
    fn hamiltonian_cycle_checker_rejects_bad_sequences() {
        let c = Tournament::parse("3:101").unwrap();
        assert!(!c.is_hamiltonian_cycle(&[1, 3, 2]));
        assert!(!c.is_hamiltonian_cycle(&[1, 2]));
        assert!(!c.is_hamiltonian_cycle(&[1, 1, 2]));
    }

    #[test]
    fn parabolic() {
        assert!(Tournament::parse("3:101").unwrap().is_parabolic());
        assert!(Tournament::parse("3:010").unwrap().is_parabolic());
        assert!(!Tournament::canonical(4).is_parabolic());
        assert!(!Tournament::canonical(3).is_parabolic());
    }

    #[test]
    fn four_profile() {
        let p = Tournament::canonical(5).four_subtournament_profile().unwrap();
        assert_eq!(p.count(FourClass::Transitive), 5);
        assert_eq!(p.witness, None);

        // source 4 over the 3-cycle 1->2->3->1: scores (1,1,1,3)
        let t = Tournament::from_fn(4, |i, j| !matches!((i, j), (1, 3) | (_, 4)))
        .unwrap();
        assert_eq!(t.score_vector().sorted(), vec![1, 1, 1, 3]);
        let p = t.four_subtournament_profile().unwrap();
        assert_eq!(p.count(FourClass::SourceOverCycle), 1);
        assert_eq!(p.witness, Some([1, 2, 3, 4]));

        assert_eq!(
            Tournament::canonical(3).four_subtournament_profile(),
            Err(Error::TooFewPlayers { min: 4, got: 3 })
        );
    }

    #[test]
    fn relabel_validates_permutation() {
        let t = Tournament::canonical(3);
        assert_eq!(t.relabel(&[3, 2, 1]).unwrap(), t.reversed());
        assert!(t.relabel(&[1, 1, 2]).is_err());
        assert!(t.relabel(&[1, 2]).is_err());
    }
}
