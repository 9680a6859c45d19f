//! Closed-form dimension counts that the computed ranks are checked against.

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim (H^2)^{S_2} = C(g,2) + g`
pub fn sym2_dim(g: usize) -> usize {
    binomial(g, 2) + g
}

/// `dim (H^3)^{S_3} = C(g,3) + 2 C(g,2) + g`
pub fn sym3_dim(g: usize) -> usize {
    binomial(g, 3) + 2 * binomial(g, 2) + g
}

/// `dim (H_even^3)^{S_3} = C(g-1,3) + 2 C(g-1,2) + (g-1)`
pub fn even_sym3_dim(g: usize) -> usize {
    sym3_dim(g.saturating_sub(1))
}

/// Dimension of `H_1(Gamma_2(N_g); Z)` over Z/2: `C(g,3) + C(g,2)`.
pub fn abelianization_dim(g: usize) -> usize {
    binomial(g, 3) + binomial(g, 2)
}

/// Lower bound on the span of tau_1 values: `C(g,3) + C(g,2) + g`.
pub fn tau1_image_dim(g: usize) -> usize {
    abelianization_dim(g) + g
}

/// Size of the slide-plus-quadruple generating set: `(g-1)^2 + C(g-1,3)`.
pub fn generator_count(g: usize) -> usize {
    let h = g.saturating_sub(1);
    h * h + binomial(h, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn dims_at_four() {
        assert_eq!(sym3_dim(4), 20);
        assert_eq!(sym2_dim(4), 10);
        assert_eq!(even_sym3_dim(4), 10);
        assert_eq!(even_sym3_dim(3), 4);
        assert_eq!(abelianization_dim(4), 10);
        assert_eq!(tau1_image_dim(4), 14);
        assert_eq!(generator_count(4), 10);
        assert_eq!(generator_count(6), 35);
        assert_eq!(generator_count(10), 165);
    }
}
