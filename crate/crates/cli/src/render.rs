//! Young diagrams as text.

use bsol_core::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// One row of `#` per pile, largest first.
    Rows,
    /// The diagram turned 45 degrees: box `(i, j)` sits on level
    /// `i + j - 1` (level 1 at the bottom) at horizontal offset `j - i`.
    Cradle,
}

pub fn render_young(lambda: &Partition, style: Style) -> String {
    match style {
        Style::Rows => lambda
            .parts()
            .iter()
            .map(|&p| "#".repeat(p as usize))
            .collect::<Vec<_>>()
            .join("\n"),
        Style::Cradle => render_cradle(lambda),
    }
}

fn render_cradle(lambda: &Partition) -> String {
    let parts = lambda.parts();
    if parts.is_empty() {
        return String::new();
    }
    let rows = parts.len() as i64;
    let cols = parts[0] as i64;
    let levels = (rows + cols - 1) as usize;
    // offsets j - i run from 1 - rows to cols - 1
    let width = (rows + cols - 1) as usize;
    let mut grid = vec![vec![' '; width]; levels];
    for (r, &len) in parts.iter().enumerate() {
        let i = r as i64 + 1;
        for j in 1..=len as i64 {
            let level = (i + j - 1) as usize;
            let x = (j - i + rows - 1) as usize;
            grid[levels - level][x] = '#';
        }
    }
    grid.into_iter()
        .map(|line| line.into_iter().collect::<String>().trim_end().to_string())
        .filter(|line| !line.is_empty())
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rows() {
        assert_eq!(render_young(&p(&[2, 1]), Style::Rows), "##\n#");
        assert_eq!(render_young(&p(&[4, 3, 3]), Style::Rows), "####\n###\n###");
        assert_eq!(render_young(&Partition::empty(), Style::Rows), "");
    }

    #[test]
    fn cradle_staircase_is_a_symmetric_triangle() {
        let text = render_young(&p(&[3, 2, 1]), Style::Cradle);
        assert_eq!(text, "# # #\n # #\n  #");
        assert_eq!(text.matches('#').count(), 6);
    }

    #[test]
    fn cradle_of_a_row_and_a_column() {
        // one pile leans to the right, one card per pile to the left
        assert_eq!(render_young(&p(&[3]), Style::Cradle), "  #\n #\n#");
        assert_eq!(render_young(&p(&[1, 1, 1]), Style::Cradle), "#\n #\n  #");
    }
}
