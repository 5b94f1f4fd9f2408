//! Variable layout shared by every polynomial in a session.
//!
//! Indices `0..m` are the form variables, followed by the optional
//! parameter `t`, followed by the root variable `_c` that Rothstein–Trager
//! pairs use for their residues.

pub const ROOT_NAME: &str = "_c";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars {
    names: Vec<String>,
    nforms: usize,
    param: Option<usize>,
}

impl Vars {
    pub fn new<S: AsRef<str>>(forms: &[S], param: Option<&str>) -> Self {
        let mut names: Vec<String> = forms.iter().map(|s| s.as_ref().to_string()).collect();
        let nforms = names.len();
        let param = param.map(|p| {
            names.push(p.to_string());
            nforms
        });
        names.push(ROOT_NAME.to_string());
        Vars { names, nforms, param }
    }

    /// Form variables `x, y, z, ...` with parameter `t`.
    pub fn with_param<S: AsRef<str>>(forms: &[S]) -> Self {
        Self::new(forms, Some("t"))
    }

    /// Generic names for a ring of `nvars` variables with `nforms` form
    /// variables: `x1..xm`, then `t` if there is room, then the root.
    pub fn generic(nforms: usize, nvars: usize) -> Self {
        let forms: Vec<String> = (1..=nforms).map(|i| format!("x{}", i)).collect();
        let param = (nvars >= nforms + 2).then_some("t");
        let v = Self::new(&forms, param);
        assert_eq!(v.nvars(), nvars, "unsupported variable layout");
        v
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Total number of ring variables (forms, parameter, root).
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Number of form variables `m`.
    pub fn nforms(&self) -> usize {
        self.nforms
    }

    pub fn param(&self) -> Option<usize> {
        self.param
    }

    pub fn root(&self) -> usize {
        self.names.len() - 1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }
}
