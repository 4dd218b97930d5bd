use serde::Serialize;

/// One identity and the first tuple violating it, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub all_hold: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { all_hold: true, checks: Vec::new() }
    }

    /// Records `name` with the first failing tuple among `tuples`.
    pub fn check<I>(&mut self, name: &str, tuples: I, holds: impl Fn(&[usize]) -> bool)
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let witness = tuples.into_iter().find(|t| !holds(t));
        self.all_hold &= witness.is_none();
        self.checks.push(Check { name: name.to_string(), holds: witness.is_none(), witness });
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// All `k`-tuples over `0..n` in lexicographic order.
pub(crate) fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(k as u32)).map(move |mut i| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = i % n;
            i /= n;
        }
        t
    })
}
