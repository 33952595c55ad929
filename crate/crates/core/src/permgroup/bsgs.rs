//! Deterministic Schreier–Sims: base and strong generating set, group order
//! and membership by sifting.

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: u32,
    gens: Vec<Permutation>,
    /// `transversal[β] = u` with `base_point^u = β`, for β in the basic orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point as usize] = Some(Permutation::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            transversal,
            orbit: vec![base_point],
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base_point as usize] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base_point];
        let mut head = 0;
        while head < self.orbit.len() {
            let gamma = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let delta = s.apply(gamma);
                if self.transversal[delta as usize].is_none() {
                    let u = self.transversal[gamma as usize].as_ref().unwrap().then(s);
                    self.transversal[delta as usize] = Some(u);
                    self.orbit.push(delta);
                }
            }
        }
    }
}

/// A base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        for g in &gens {
            if bsgs.levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let moved = moved_point(g);
                bsgs.levels.push(Level::new(moved, degree));
            }
        }
        for g in &gens {
            for i in 0..bsgs.levels.len() {
                let fixes_prefix = bsgs.levels[..i]
                    .iter()
                    .all(|l| g.apply(l.base_point) == l.base_point);
                if fixes_prefix {
                    bsgs.levels[i].gens.push(g.clone());
                }
            }
        }
        for level in &mut bsgs.levels {
            level.rebuild_orbit();
        }
        bsgs.schreier_sims();
        bsgs
    }

    fn schreier_sims(&mut self) {
        let mut i = self.levels.len();
        'outer: while i >= 1 {
            let lvl = i - 1;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &beta in &orbit {
                for s in &gens {
                    let u_beta = self.levels[lvl].transversal[beta as usize].as_ref().unwrap();
                    let image = s.apply(beta);
                    let u_img = self.levels[lvl].transversal[image as usize].as_ref().unwrap();
                    let h = u_beta.then(s).then(&u_img.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, drop_level) = self.strip(&h, lvl + 1);
                    let mut extend = drop_level < self.levels.len();
                    if !extend && !residue.is_identity() {
                        extend = true;
                        let moved = moved_point(&residue);
                        self.levels.push(Level::new(moved, self.degree));
                    }
                    if extend {
                        let top = drop_level.min(self.levels.len() - 1);
                        for l in (lvl + 1)..=top {
                            self.levels[l].gens.push(residue.clone());
                            self.levels[l].rebuild_orbit();
                        }
                        i = top + 1;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` through the levels starting at `from`. Returns the residue and
    /// the level at which sifting stopped (`levels.len()` if it went through).
    fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut y = g.clone();
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let beta = y.apply(level.base_point);
            match &level.transversal[beta as usize] {
                None => return (y, l),
                Some(u) => y = y.then(&u.inverse()),
            }
        }
        (y, self.levels.len())
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, level) = self.strip(g, 0);
        level == self.levels.len() && residue.is_identity()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }
}

fn moved_point(g: &Permutation) -> u32 {
    g.images()
        .iter()
        .enumerate()
        .find(|(i, &x)| *i as u32 != x)
        .map(|(i, _)| i as u32)
        .expect("non-identity permutation moves a point")
}
