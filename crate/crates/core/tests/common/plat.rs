//! Planar diagrams from braid words: n strands run through a rectangle in the
//! disk; each end of each strand is either capped off with its neighbour or
//! continued straight to the wall. Every diagram built this way is the
//! projection of an actual link.

use rplink_core::{Crossing, Event, ProjectiveDiagram, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    /// Joined to the neighbour on the right (the neighbour is `CapLeft`).
    CapRight,
    CapLeft,
    Wall,
}

#[derive(Clone, Debug)]
pub struct Plat {
    pub n: usize,
    /// (i, over): generator at strands i, i+1; `over` means the strand
    /// rising from i to i+1 passes over.
    pub word: Vec<(usize, bool)>,
    pub bottom: Vec<End>,
    pub top: Vec<End>,
    /// Traverse each component downward instead of upward at its start.
    pub reverse: Vec<bool>,
}

impl Plat {
    /// Wall points in counterclockwise order: top ends right to left, then
    /// bottom ends left to right. Returns (is_top, position).
    fn wall_points(&self) -> Vec<(bool, usize)> {
        let mut pts: Vec<(bool, usize)> = (0..self.n).rev().filter(|&i| self.top[i] == End::Wall).map(|i| (true, i)).collect();
        pts.extend((0..self.n).filter(|&i| self.bottom[i] == End::Wall).map(|i| (false, i)));
        pts
    }

    pub fn diagram(&self) -> Option<ProjectiveDiagram> {
        let walls = self.wall_points();
        if walls.len() % 2 == 1 {
            return None;
        }
        let p = walls.len() / 2;
        let label_of = |top: bool, pos: usize| walls.iter().position(|&w| w == (top, pos)).unwrap() as u32 + 1;
        let antipode = |j: u32| if j as usize > p { j - p as u32 } else { j + p as u32 };
        let levels = self.word.len();
        let mut visited = vec![vec![false; self.n]; levels + 1];
        let mut eps = vec![0i8; 2 * p];
        // traversal directions of the (over, under) strand at each crossing
        let mut dirs = vec![[(0i64, 0i64); 2]; levels];
        let mut components = Vec::new();
        let mut comp_index = 0;
        while let Some((l0, x0)) = (0..=levels).flat_map(|l| (0..self.n).map(move |x| (l, x))).find(|&(l, x)| !visited[l][x]) {
            let mut up = !self.reverse.get(comp_index).copied().unwrap_or(false);
            comp_index += 1;
            let (mut l, mut x) = (l0, x0);
            let start_up = up;
            let mut events = Vec::new();
            let mut steps = 0;
            loop {
                visited[l][x] = true;
                steps += 1;
                if steps > 10_000 {
                    return None;
                }
                // move one level in the current direction
                if up && l == levels || !up && l == 0 {
                    let ends = if up { &self.top } else { &self.bottom };
                    match ends[x] {
                        End::CapRight => x += 1,
                        End::CapLeft => x -= 1,
                        End::Wall => {
                            let j = label_of(up, x);
                            let k = antipode(j);
                            eps[j as usize - 1] = 1;
                            eps[k as usize - 1] = -1;
                            events.push(Event::Boundary(j));
                            events.push(Event::Boundary(k));
                            let (is_top, pos) = walls[k as usize - 1];
                            x = pos;
                            l = if is_top { levels } else { 0 };
                            up = !is_top;
                            if (l, x, up) == (l0, x0, start_up) {
                                break;
                            }
                            continue;
                        }
                    }
                    up = !up;
                } else {
                    let step = if up { l } else { l - 1 };
                    let (i, over_rising) = self.word[step];
                    let next_l = if up { l + 1 } else { l - 1 };
                    if x == i || x == i + 1 {
                        // rising strand goes from (step, i) to (step+1, i+1)
                        let on_rising = if up { x == i } else { x == i + 1 };
                        let is_over = on_rising == over_rising;
                        let id = step as u32 + 1;
                        events.push(if is_over { Event::Over(id) } else { Event::Under(id) });
                        let v = if on_rising { (1, 1) } else { (-1, 1) };
                        dirs[step][if is_over { 0 } else { 1 }] = if up { v } else { (-v.0, -v.1) };
                        x = if x == i { i + 1 } else { i };
                    }
                    l = next_l;
                }
                if (l, x, up) == (l0, x0, start_up) {
                    break;
                }
            }
            components.push(events);
        }
        let crossings = (0..levels)
            .map(|step| {
                let [o, u] = dirs[step];
                let sign = if o.0 * u.1 - o.1 * u.0 > 0 { Sign::Positive } else { Sign::Negative };
                Crossing { id: step as u32 + 1, sign }
            })
            .collect();
        ProjectiveDiagram::new(p as u32, eps, crossings, components).ok()
    }
}
