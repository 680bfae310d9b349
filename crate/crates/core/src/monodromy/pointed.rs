/// A set of canonical class representatives with a distinguished element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedSet<T> {
    pub elements: Vec<T>,
    pub basepoint: usize,
}

impl<T> PointedSet<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn base(&self) -> &T {
        &self.elements[self.basepoint]
    }
}

/// One term of a sequence, reduced to its size and basepoint; elements are
/// the indices `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqTerm {
    pub name: String,
    pub size: usize,
    pub basepoint: usize,
}

impl SeqTerm {
    pub fn new(name: impl Into<String>, size: usize, basepoint: usize) -> Self {
        SeqTerm { name: name.into(), size, basepoint }
    }

    pub fn point(name: impl Into<String>) -> Self {
        SeqTerm::new(name, 1, 0)
    }
}

/// Why a sequence fails to be exact at a term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactnessWitness {
    /// An element of the previous term whose image does not map to the
    /// basepoint of the next term.
    ImageNotInKernel { source: usize },
    /// An element mapping to the basepoint that is not in the image.
    KernelNotInImage { element: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactAt {
    pub term: usize,
    pub exact: bool,
    pub witness: Option<ExactnessWitness>,
}

/// A finite sequence of pointed sets and maps, with exactness checked
/// elementwise at every interior term: image of the incoming map equals the
/// preimage of the basepoint under the outgoing one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSeqReport {
    pub terms: Vec<SeqTerm>,
    /// `maps[i]` sends term `i` to term `i + 1`, as an image per element.
    pub maps: Vec<Vec<usize>>,
    pub exact_at: Vec<ExactAt>,
}

impl ExactSeqReport {
    pub fn new(terms: Vec<SeqTerm>, maps: Vec<Vec<usize>>) -> Self {
        assert_eq!(maps.len() + 1, terms.len(), "one map between each pair of terms");
        for (i, m) in maps.iter().enumerate() {
            assert_eq!(m.len(), terms[i].size, "map {i} has the wrong domain");
            assert!(m.iter().all(|&y| y < terms[i + 1].size), "map {i} leaves its codomain");
        }
        let mut report = ExactSeqReport { terms, maps, exact_at: Vec::new() };
        report.recheck();
        report
    }

    /// Recomputes the exactness verdicts from the current maps.
    pub fn recheck(&mut self) {
        self.exact_at = (1..self.terms.len().saturating_sub(1)).map(|i| self.check_at(i)).collect();
    }

    fn check_at(&self, i: usize) -> ExactAt {
        let incoming = &self.maps[i - 1];
        let outgoing = &self.maps[i];
        let base = self.terms[i + 1].basepoint;
        if let Some(source) = incoming.iter().position(|&y| outgoing[y] != base) {
            let witness = Some(ExactnessWitness::ImageNotInKernel { source });
            return ExactAt { term: i, exact: false, witness };
        }
        let mut in_image = vec![false; self.terms[i].size];
        for &y in incoming {
            in_image[y] = true;
        }
        match (0..self.terms[i].size).find(|&y| outgoing[y] == base && !in_image[y]) {
            Some(element) => ExactAt {
                term: i,
                exact: false,
                witness: Some(ExactnessWitness::KernelNotInImage { element }),
            },
            None => ExactAt { term: i, exact: true, witness: None },
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact_at.iter().all(|e| e.exact)
    }

    pub fn names(&self) -> Vec<&str> {
        self.terms.iter().map(|t| t.name.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_into_z4() -> ExactSeqReport {
        // 1 → Z/2 → Z/4 → Z/2 → 1
        ExactSeqReport::new(
            vec![
                SeqTerm::point("1"),
                SeqTerm::new("Z/2", 2, 0),
                SeqTerm::new("Z/4", 4, 0),
                SeqTerm::new("Z/2", 2, 0),
                SeqTerm::point("1"),
            ],
            vec![vec![0], vec![0, 2], vec![0, 1, 0, 1], vec![0, 0]],
        )
    }

    #[test]
    fn short_exact() {
        let r = z2_into_z4();
        assert_eq!(r.exact_at.len(), 3);
        assert!(r.is_exact());
    }

    #[test]
    fn corrupted_map_has_witness() {
        let mut r = z2_into_z4();
        r.maps[1] = vec![0, 1];
        r.recheck();
        assert!(!r.is_exact());
        assert_eq!(
            r.exact_at[1].witness,
            Some(ExactnessWitness::ImageNotInKernel { source: 1 })
        );
        let mut r = z2_into_z4();
        r.maps[2] = vec![0, 1, 0, 0];
        r.recheck();
        assert_eq!(r.exact_at[1].witness, Some(ExactnessWitness::KernelNotInImage { element: 3 }));
    }
}
