//! Partitions, r-partitions, boxes and standard tableaux.
//!
//! Components are indexed `0..r`, rows and columns from 1, so that the
//! content of a box is literally `col - row`. Boxes of a multipartition are
//! always listed in `(component, row, col)` order and a box's position in
//! that list is its *index*; tableaux and fillings are vectors over it.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && row <= self.parts.len() && col <= self.parts[row - 1]
    }

    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    /// Cells `(row, col)` whose addition leaves a partition, top to bottom.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            if i == 0 || self.parts[i - 1] > p {
                out.push((i + 1, p + 1));
            }
        }
        out.push((self.parts.len() + 1, 1));
        out
    }

    /// Addable cells whose content is not the content of any cell of the
    /// partition, as `(row, col, content)`.
    pub fn outside_addable(&self) -> Vec<(usize, usize, i64)> {
        let lo = -(self.parts.len() as i64) + 1;
        let hi = self.parts.first().copied().unwrap_or(0) as i64 - 1;
        self.addable()
            .into_iter()
            .map(|(r, c)| (r, c, c as i64 - r as i64))
            .filter(|&(_, _, ct)| self.is_empty() || ct < lo || ct > hi)
            .collect()
    }

    /// Corners `(row, col)` whose removal leaves a partition.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            if i + 1 == self.parts.len() || self.parts[i + 1] < p {
                out.push((i + 1, p));
            }
        }
        out
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A cell of a multipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        Cell { component, row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{},{})", self.component, self.row, self.col)
    }
}

/// `b <= b'` in the box order: same component and weakly up-left.
pub fn box_leq(b: &Cell, b2: &Cell) -> bool {
    b.component == b2.component && b.row <= b2.row && b.col <= b2.col
}

/// An r-tuple of partitions with at least one box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
    boxes: Vec<Cell>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        let mut boxes = Vec::new();
        for (k, p) in components.iter().enumerate() {
            for (i, &len) in p.parts.iter().enumerate() {
                for j in 1..=len {
                    boxes.push(Cell::new(k, i + 1, j));
                }
            }
        }
        if boxes.is_empty() {
            return Err(Error::InvalidParameter("multipartition has no boxes".into()));
        }
        Ok(MultiPartition { components, boxes })
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(parts: &[&[usize]]) -> Result<Self> {
        let comps = parts.iter().map(|p| Partition::new(p.to_vec())).collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn n(&self) -> usize {
        self.boxes.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &Partition {
        &self.components[k]
    }

    /// All boxes in `(component, row, col)` order.
    pub fn boxes(&self) -> &[Cell] {
        &self.boxes
    }

    pub fn index_of(&self, b: &Cell) -> Option<usize> {
        self.boxes.binary_search(b).ok()
    }

    pub fn contains(&self, b: &Cell) -> bool {
        b.component < self.r() && self.components[b.component].contains(b.row, b.col)
    }

    pub fn removable_boxes(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (k, p) in self.components.iter().enumerate() {
            for (r, c) in p.removable() {
                out.push(Cell::new(k, r, c));
            }
        }
        out
    }

    /// Removes a removable box. Fails if `b` is not removable or is the last box.
    pub fn remove(&self, b: &Cell) -> Result<MultiPartition> {
        let p = &self.components[b.component];
        if !p.removable().contains(&(b.row, b.col)) {
            return Err(Error::Precondition(format!("{b} is not removable")));
        }
        let mut comps = self.components.clone();
        let mut parts = p.parts.clone();
        parts[b.row - 1] -= 1;
        if parts[b.row - 1] == 0 {
            parts.pop();
        }
        comps[b.component] = Partition { parts };
        MultiPartition::new(comps)
    }

    /// `(upper rim, left rim)`: first rows and first columns of every component.
    pub fn rims(&self) -> (Vec<Cell>, Vec<Cell>) {
        let upper = self.boxes.iter().filter(|b| b.row == 1).copied().collect();
        let left = self.boxes.iter().filter(|b| b.col == 1).copied().collect();
        (upper, left)
    }

    /// Boxes on the upper or the left rim, without repetition.
    pub fn rim_boxes(&self) -> Vec<Cell> {
        self.boxes.iter().filter(|b| b.row == 1 || b.col == 1).copied().collect()
    }

    pub fn transpose(&self) -> MultiPartition {
        let comps = self.components.iter().map(Partition::transpose).collect();
        MultiPartition::new(comps).expect("transpose preserves size")
    }

    /// All standard tableaux, built by placing the largest entry at a
    /// removable box and recursing.
    pub fn standard_tableaux(&self) -> Vec<StandardTableau> {
        let n = self.n();
        let mut out = Vec::new();
        let mut entries = vec![0usize; n];
        let mut rows: Vec<Vec<usize>> = self.components.iter().map(|p| p.parts.clone()).collect();
        self.fill_syt(n, &mut rows, &mut entries, &mut out);
        out.sort();
        out
    }

    fn fill_syt(&self, k: usize, rows: &mut Vec<Vec<usize>>, entries: &mut Vec<usize>, out: &mut Vec<StandardTableau>) {
        if k == 0 {
            out.push(StandardTableau { entries: entries.clone() });
            return;
        }
        for comp in 0..rows.len() {
            for i in 0..rows[comp].len() {
                let len = rows[comp][i];
                let corner = len > 0 && rows[comp].get(i + 1).is_none_or(|&below| below < len);
                if !corner {
                    continue;
                }
                let idx = self.index_of(&Cell::new(comp, i + 1, len)).unwrap();
                entries[idx] = k;
                rows[comp][i] -= 1;
                self.fill_syt(k - 1, rows, entries, out);
                rows[comp][i] += 1;
            }
        }
    }

    /// Number of standard tableaux from the hook length formula.
    pub fn hook_count(&self) -> u128 {
        let fact = |m: usize| (1..=m as u128).product::<u128>();
        let mut num = fact(self.n());
        let mut den: u128 = 1;
        for p in &self.components {
            let t = p.transpose();
            for (i, &len) in p.parts.iter().enumerate() {
                for j in 0..len {
                    let arm = len - j - 1;
                    let leg = t.parts[j] - i - 1;
                    den *= (arm + leg + 1) as u128;
                }
            }
        }
        num /= den;
        num
    }

    /// Every multipartition of `n` with `r` components.
    pub fn all(n: usize, r: usize) -> Vec<MultiPartition> {
        fn go(left: usize, slots: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
            if slots == 0 {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for m in (0..=left).rev() {
                for p in Partition::all(m) {
                    cur.push(p);
                    go(left - m, slots - 1, cur, out);
                    cur.pop();
                }
            }
        }
        if n == 0 || r == 0 {
            return Vec::new();
        }
        let mut raw = Vec::new();
        go(n, r, &mut Vec::new(), &mut raw);
        raw.into_iter().map(|c| MultiPartition::new(c).unwrap()).collect()
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `"[3,2],[2,2]"`-style text. Whitespace between tokens is allowed;
/// `r` is the expected number of bracket groups.
pub fn parse_multipartition(text: &str, r: usize) -> Result<MultiPartition> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut comps = Vec::new();
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() || bytes[pos] != b'[' {
            return Err(Error::parse(pos, "expected `[`"));
        }
        pos += 1;
        let mut parts = Vec::new();
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b']' {
            pos += 1;
        } else {
            loop {
                skip_ws(&mut pos);
                let num_start = pos;
                if pos < bytes.len() && bytes[pos] == b'-' {
                    return Err(Error::parse(pos, "negative part"));
                }
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if num_start == pos {
                    return Err(Error::parse(pos, "expected a positive integer"));
                }
                let v: usize = text[num_start..pos].parse().map_err(|_| Error::parse(num_start, "part too large"))?;
                if v == 0 {
                    return Err(Error::parse(num_start, "parts must be positive"));
                }
                if let Some(&last) = parts.last() {
                    if v > last {
                        return Err(Error::parse(num_start, "parts must be weakly decreasing"));
                    }
                }
                parts.push(v);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b']') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(Error::parse(pos, "expected `,` or `]`")),
                }
            }
        }
        comps.push(Partition { parts });
        skip_ws(&mut pos);
        match bytes.get(pos) {
            None => break,
            Some(b',') => pos += 1,
            Some(_) => return Err(Error::parse(pos, "expected `,` between components")),
        }
    }
    if comps.len() != r {
        return Err(Error::parse(text.len(), format!("expected {r} components, found {}", comps.len())));
    }
    if comps.iter().all(Partition::is_empty) {
        return Err(Error::parse(text.len(), "total size n must be at least 1"));
    }
    MultiPartition::new(comps)
}

/// A standard filling, stored as `entries[box index]` with values `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    entries: Vec<usize>,
}

impl StandardTableau {
    /// Validates a filling against the shape.
    pub fn new(shape: &MultiPartition, entries: Vec<usize>) -> Result<Self> {
        let n = shape.n();
        if entries.len() != n || !is_permutation(&entries) {
            return Err(Error::InvalidParameter("tableau entries must be 1..=n".into()));
        }
        for (i, b) in shape.boxes().iter().enumerate() {
            for (j, b2) in shape.boxes().iter().enumerate() {
                if i != j && box_leq(b, b2) && entries[i] > entries[j] {
                    return Err(Error::InvalidParameter("tableau is not standard".into()));
                }
            }
        }
        Ok(StandardTableau { entries })
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<usize>) -> Self {
        StandardTableau { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn entry(&self, box_index: usize) -> usize {
        self.entries[box_index]
    }

    /// `inverse()[i - 1]` is the index of the box holding `i`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.entries.len()];
        for (b, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = b;
        }
        inv
    }
}

pub(crate) fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x == 0 || x > v.len() || seen[x - 1] {
            return false;
        }
        seen[x - 1] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let mp = parse_multipartition("[3,2],[2,2]", 2).unwrap();
        assert_eq!(mp.n(), 9);
        assert_eq!(mp.component(0).parts(), &[3, 2]);
        assert!(parse_multipartition("[],[]", 2).is_err());
        assert!(parse_multipartition("[2,3]", 1).is_err());
        assert!(parse_multipartition("[2,-1]", 1).is_err());
        assert!(parse_multipartition("[2]", 2).is_err());
        let e = parse_multipartition("[ 1 , 1 ] , [ ]", 2).unwrap();
        assert_eq!(e.to_string(), "[1,1],[]");
    }

    #[test]
    fn parse_error_positions() {
        match parse_multipartition("[2,3]", 1) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn boxes_and_contents() {
        let mp = MultiPartition::from_parts(&[&[3, 2], &[2, 2]]).unwrap();
        let b = Cell::new(1, 1, 2);
        assert!(mp.contains(&b));
        assert_eq!(b.content(), 1);
        let mp = MultiPartition::from_parts(&[&[2, 1]]).unwrap();
        let cts: Vec<i64> = mp.boxes().iter().map(Cell::content).collect();
        assert_eq!(cts, vec![0, 1, -1]);
    }

    #[test]
    fn order_examples() {
        assert!(box_leq(&Cell::new(0, 1, 1), &Cell::new(0, 2, 2)));
        assert!(!box_leq(&Cell::new(0, 1, 2), &Cell::new(0, 2, 1)));
        assert!(!box_leq(&Cell::new(0, 1, 1), &Cell::new(1, 1, 1)));
    }

    #[test]
    fn addable_examples() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.addable(), vec![(1, 3), (2, 2), (3, 1)]);
        assert_eq!(p.outside_addable(), vec![(1, 3, 2), (3, 1, -2)]);
        let e = Partition::empty();
        assert_eq!(e.addable(), vec![(1, 1)]);
        assert_eq!(e.outside_addable(), vec![(1, 1, 0)]);
        let mp = MultiPartition::from_parts(&[&[2]]).unwrap();
        assert_eq!(mp.removable_boxes(), vec![Cell::new(0, 1, 2)]);
    }

    #[test]
    fn rim_examples() {
        let mp = MultiPartition::from_parts(&[&[3, 2]]).unwrap();
        let (u, l) = mp.rims();
        assert_eq!(u.len(), 3);
        assert_eq!(l, vec![Cell::new(0, 1, 1), Cell::new(0, 2, 1)]);
        let mp = MultiPartition::from_parts(&[&[2], &[1, 1]]).unwrap();
        let (u, l) = mp.rims();
        assert_eq!((u.len(), l.len()), (3, 3));
    }

    #[test]
    fn tableau_counts() {
        for (parts, count) in [(vec![vec![2]], 1), (vec![vec![1], vec![1]], 2), (vec![vec![2, 1]], 2)] {
            let comps = parts.into_iter().map(|p| Partition::new(p).unwrap()).collect();
            let mp = MultiPartition::new(comps).unwrap();
            assert_eq!(mp.standard_tableaux().len(), count);
            assert_eq!(mp.hook_count(), count as u128);
        }
    }

    #[test]
    fn transpose_examples() {
        let mp = MultiPartition::from_parts(&[&[2]]).unwrap();
        assert_eq!(mp.transpose().to_string(), "[1,1]");
        let mp = MultiPartition::from_parts(&[&[3, 2], &[2, 2]]).unwrap();
        assert_eq!(mp.transpose().to_string(), "[2,2,1],[2,2]");
        let mp = MultiPartition::from_parts(&[&[2, 1], &[1]]).unwrap();
        assert_eq!(mp.transpose().transpose(), mp);
    }

    #[test]
    fn enumerates_all_multipartitions() {
        assert_eq!(MultiPartition::all(3, 1).len(), 3);
        assert_eq!(MultiPartition::all(2, 2).len(), 5);
        assert_eq!(MultiPartition::all(3, 3).len(), 22);
    }
}
