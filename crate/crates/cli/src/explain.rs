//! One-paragraph statement of what each check verifies.

pub fn explain(check: &str) -> Option<&'static str> {
    let text = match check {
        "cardinality" => {
            "|A⋈^f J| = |A|·|J|. The map f^⋈: A⊕̇J → A⋈^f J, (a,j) ↦ (a, f(a)+j), is an injective \
             ring homomorphism onto the amalgamation; the element set is compared with the definition."
        }
        "pull_identity" => {
            "A⋈^f J equals the fiber product f̆ ×_{B/J} π of f̆ = π∘f: A → B/J and the projection \
             π: B → B/J, compared as sets of pairs."
        }
        "alt_pullback" => {
            "A⋈^f J is isomorphic to the pullback u ×_C v with C = A × B/J, and to ŭ ×_{C̆} v̆ with \
             C̆ = A/f⁻¹(J) × B/J, through their canonical maps, each validated."
        }
        "canonical_isos" => {
            "(A⋈^f J)/(I⋈^f J) ≅ A/I for an ideal I of A (default f⁻¹(J)); (A⋈^f J)/({0}×J) ≅ A; \
             (A⋈^f J)/(f⁻¹(J)×{0}) ≅ f(A)+J; (A⋈^f J)/(f⁻¹(J)×J) ≅ (f(A)+J)/J, which is B/J when f \
             is surjective. Each witness is validated as a bijective homomorphism."
        }
        "domain_criterion" => {
            "For J ≠ 0: A⋈^f J is a domain ⟺ f(A)+J is a domain and f⁻¹(J) = 0. On finite rings \
             both sides are always false, which the report documents."
        }
        "reduced_criterion" => "A⋈^f J is reduced ⟺ A is reduced and Nilp(B) ∩ J = 0.",
        "reduced_converse" => {
            "Searches the given instances for A⋈^f J reduced while f(A)+J is not. For finite rings \
             no such instance exists: reduced finite rings are products of fields."
        }
        "same_amalgam" => "For f, g: A → B and an ideal J of B: A⋈^f J = A⋈^g J ⟺ f(a) − g(a) ∈ J for all a.",
        "iter_iso" => {
            "The n-fold amalgamation A⋈^{n,f} J ≅ A^{(n−1,f)} ⋈ J^{(n−1,f)}, with |A⋈^{n,f} J| = |A|·|J|ⁿ, \
             validated through two explicit witnesses."
        }
        "b_diamond" => "f(A)+J is a subring of B, and the report gives its elements.",
        "factor" => {
            "For α: A → C, β: B → C and f: A → B: α ×_C β = A⋈^f J for some ideal J ⟺ α = β∘f, and \
             then J = Ker(β)."
        }
        "fibret" => {
            "The projection α ×_C β → A is a retraction ⟺ the pullback is an amalgamation A⋈^f J. \
             Without a section the absence of any presentation is certified by enumeration."
        }
        "retraction_roundtrip" => {
            "A⋈^f J re-entered as the pullback f̆ ×_{B/J} π: its projection to A has a section, and J \
             is recovered as Ker(π)."
        }
        "prid" => {
            "For a pullback D = α ×_C β: D reduced implies Nilp(A)∩Ker(α) = 0 = Nilp(B)∩Ker(β); A reduced \
             with Nilp(B)∩Ker(β) = 0, or the symmetric condition, implies D reduced."
        }
        "kernel_identity" => "For a pullback α ×_C β, the kernel of the projection to A is {0} × Ker(β).",
        "dorroh" => {
            "For a rng R of characteristic n, Dh_n(R) = (Z/nZ) ⊕̇ R has identity (1,0), \
             Dh_n(R)/R ≅ Z/nZ, and Dh_n(R) = (Z/nZ)(1,0) + R."
        }
        "nagata" => {
            "The idealization A⋉M equals the amalgamation A⋈^ι M, with ι: A → A⋉M canonical and M \
             identified with {0}×M, which squares to zero."
        }
        "d_plus_m" => {
            "For maximal ideals M of T meeting the subring D only in 0 and J their intersection: \
             D+J ≅ D⋈^ι J, with ι the inclusion."
        }
        "cpi_prime" => {
            "For a prime P of A with k(P) = A_P/PA_P and ψ: A_P → k(P): C(A,P) = ψ⁻¹(A/P) equals \
             λ(A)+PA_P and is isomorphic to (A⋈^λ PA_P)/(P×{0})."
        }
        "cpi_ideal" => {
            "For an ideal I of A, S_I the elements regular modulo I and φ_I: S_I⁻¹A → Tot(A/I): \
             C(A,I) = φ_I⁻¹(A/I) equals λ_I(A)+S_I⁻¹I and is isomorphic to \
             (A⋈^{λ_I} S_I⁻¹I)/(λ_I⁻¹(S_I⁻¹I)×{0})."
        }
        "trunc_poly_amalgam" => {
            "Inside B[X]/(deg > k), the ring A+XJ[X] of polynomials with constant term in A and other \
             coefficients in J is the image of A⋈^σ J′, σ the constant embedding."
        }
        "noetherian" => {
            "A⋈^f J is Noetherian when A and f(A)+J are; conversely with J finitely generated over A \
             or f̆ finite. On finite data every hypothesis holds; a minimum generating set of J is shown."
        }
        "noetherian_xjx" => {
            "Theorem-backed: A+XJ[X] is Noetherian ⟺ A is Noetherian, J² = J and J is finitely \
             generated over A; A+XB[X] is Noetherian when A is and A ⊆ B is finite. Only the finite-side \
             hypotheses are computed."
        }
        "isomorphic" => "R ≅ S: searches for a ring isomorphism and validates it; fails with the distinguishing invariant otherwise.",
        _ => return None,
    };
    Some(text)
}

#[cfg(test)]
mod tests {
    #[test]
    fn every_check_is_explained() {
        for s in crate::sig::CHECKS {
            assert!(super::explain(s.name).is_some(), "{}", s.name);
        }
    }
}
