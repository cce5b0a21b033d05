//! Data-parallel helpers. With the `parallel` feature the work is spread over the
//! rayon pool; without it, or with [`Execution::Sequential`], it runs in order.
//! Results are always returned in input order.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run in parallel.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

pub fn map<T, U, F>(exec: Execution, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match exec {
        Execution::Sequential => items.into_iter().map(f).collect(),
        Execution::Parallel => parallel::map(items, f),
    }
}

pub fn flat_map<T, U, F>(exec: Execution, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Vec<U> + Sync + Send,
{
    map(exec, items, f).into_iter().flatten().collect()
}

#[cfg(feature = "parallel")]
mod parallel {
    use rayon::prelude::*;

    pub fn map<T: Send, U: Send, F: Fn(T) -> U + Sync + Send>(items: Vec<T>, f: F) -> Vec<U> {
        items.into_par_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
mod parallel {
    pub fn map<T, U, F: Fn(T) -> U>(items: Vec<T>, f: F) -> Vec<U> {
        items.into_iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u32> = (0..1000).collect();
        let seq = map(Execution::Sequential, v.clone(), |x| x * x);
        let par = map(Execution::Parallel, v, |x| x * x);
        assert_eq!(seq, par);
    }
}
