use crate::formula::Var;

/// Indexed binary max-heap of variables keyed by activity; ties go to the
/// lower variable index.
#[derive(Clone, Debug, Default)]
pub(crate) struct VarHeap {
    heap: Vec<Var>,
    index: Vec<Option<usize>>,
}

#[inline]
fn before(act: &[f64], x: Var, y: Var) -> bool {
    let (ax, ay) = (act[x.index()], act[y.index()]);
    ax > ay || (ax == ay && x < y)
}

impl VarHeap {
    pub(crate) fn grow_to(&mut self, num_vars: usize) {
        if self.index.len() < num_vars {
            self.index.resize(num_vars, None);
        }
    }

    pub(crate) fn contains(&self, v: Var) -> bool {
        self.index.get(v.index()).is_some_and(Option::is_some)
    }

    pub(crate) fn insert(&mut self, v: Var, act: &[f64]) {
        self.grow_to(v.index() + 1);
        if self.contains(v) {
            return;
        }
        let pos = self.heap.len();
        self.heap.push(v);
        self.index[v.index()] = Some(pos);
        self.sift_up(pos, act);
    }

    /// Restores order after `v`'s activity increased.
    pub(crate) fn increased(&mut self, v: Var, act: &[f64]) {
        if let Some(pos) = self.index.get(v.index()).copied().flatten() {
            self.sift_up(pos, act);
        }
    }

    pub(crate) fn pop(&mut self, act: &[f64]) -> Option<Var> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().unwrap();
        self.index[top.index()] = None;
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.index[last.index()] = Some(0);
            self.sift_down(0, act);
        }
        Some(top)
    }

    fn sift_up(&mut self, mut pos: usize, act: &[f64]) {
        let v = self.heap[pos];
        while pos > 0 {
            let parent = (pos - 1) / 2;
            let p = self.heap[parent];
            if !before(act, v, p) {
                break;
            }
            self.heap[pos] = p;
            self.index[p.index()] = Some(pos);
            pos = parent;
        }
        self.heap[pos] = v;
        self.index[v.index()] = Some(pos);
    }

    fn sift_down(&mut self, mut pos: usize, act: &[f64]) {
        let v = self.heap[pos];
        let n = self.heap.len();
        loop {
            let left = 2 * pos + 1;
            if left >= n {
                break;
            }
            let right = left + 1;
            let child = if right < n && before(act, self.heap[right], self.heap[left]) {
                right
            } else {
                left
            };
            if !before(act, self.heap[child], v) {
                break;
            }
            self.heap[pos] = self.heap[child];
            self.index[self.heap[pos].index()] = Some(pos);
            pos = child;
        }
        self.heap[pos] = v;
        self.index[v.index()] = Some(pos);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pops_by_activity_then_index() {
        let mut act = vec![0.0; 6];
        let mut h = VarHeap::default();
        for i in (0..6).rev() {
            h.insert(Var::new(i), &act);
        }
        act[4] = 2.0;
        h.increased(Var::new(4), &act);
        act[2] = 2.0;
        h.increased(Var::new(2), &act);
        let order: Vec<usize> = std::iter::from_fn(|| h.pop(&act)).map(Var::index).collect();
        assert_eq!(order, vec![2, 4, 0, 1, 3, 5]);
    }
}
