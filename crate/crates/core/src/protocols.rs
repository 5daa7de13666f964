//! Statevector simulation of sparse-spectrum compression and natural-order
//! filtering.
//!
//! Measurements are never sampled: a projective measurement is simulated by
//! projecting onto the requested branch and reporting its probability.

use crate::error::{GttError, Result};
use crate::transform::GttOperator;
use crate::vector::ComplexVector;
use crate::Complex;

const ZERO: Complex = Complex::new(0.0, 0.0);

/// Relative tolerance under which two magnitudes count as tied in top-k
/// selection; ties go to the smaller index.
pub const TIE_TOL: f64 = 1e-12;

/// Selections retaining no more than this mass are treated as empty.
pub const ZERO_MASS: f64 = 1e-24;

/// `|⟨a|b⟩|²` for unit vectors of equal length.
pub fn fidelity(a: &ComplexVector, b: &ComplexVector) -> Result<f64> {
    a.check_len(b.len())?;
    a.check_unit_norm()?;
    b.check_unit_norm()?;
    Ok(a.inner(b)?.norm_sqr())
}

/// Retained index set `S_k` (ascending) and its spectral mass `𝒩²`.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseSelection {
    indices: Vec<usize>,
    mass: f64,
}

impl SparseSelection {
    /// Builds a selection from arbitrary indices into `spectrum`; indices are
    /// sorted and must be distinct and in range.
    pub fn from_indices(spectrum: &[Complex], mut indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(GttError::BadSelection("empty index set".into()));
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(GttError::BadSelection("duplicate indices".into()));
        }
        let last = *indices.last().expect("non-empty");
        if last >= spectrum.len() {
            return Err(GttError::BadSelection(format!(
                "index {last} outside 0..{}",
                spectrum.len()
            )));
        }
        let mass = indices.iter().map(|&i| spectrum[i].norm_sqr()).sum();
        Ok(Self { indices, mass })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }

    /// Retained mass `𝒩² = Σ_{y∈S_k} |â_y|²`.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// `𝒩 = √mass`.
    pub fn normalizer(&self) -> f64 {
        self.mass.sqrt()
    }

    /// Position of `y` in the ascending index list: the bijection
    /// `f: S_k → {0, …, k−1}`.
    pub fn rank_of(&self, y: usize) -> Option<usize> {
        self.indices.binary_search(&y).ok()
    }

    fn gather(&self, spectrum: &[Complex]) -> Vec<Complex> {
        self.indices.iter().map(|&i| spectrum[i]).collect()
    }
}

/// Indices of the `k` largest `|â_y|`, ascending.
pub fn top_k_indices(spectrum: &ComplexVector, k: usize) -> Result<SparseSelection> {
    let len = spectrum.len();
    if k == 0 || k > len {
        return Err(GttError::BadK { k, len });
    }
    let mags: Vec<f64> = spectrum.iter().map(|z| z.norm()).collect();
    let mut order: Vec<usize> = (0..len).collect();
    order.sort_by(|&a, &b| mags[b].total_cmp(&mags[a]).then(a.cmp(&b)));

    // Everything clearly above the k-th magnitude is kept; the rest of the
    // slots go to the lowest indices among those tied with it.
    let threshold = mags[order[k - 1]];
    let tol = TIE_TOL * threshold.max(f64::MIN_POSITIVE);
    let mut chosen: Vec<usize> = order.iter().copied().filter(|&i| mags[i] > threshold + tol).collect();
    let mut tied: Vec<usize> = (0..len).filter(|&i| (mags[i] - threshold).abs() <= tol).collect();
    tied.truncate(k - chosen.len());
    chosen.extend(tied);
    SparseSelection::from_indices(spectrum, chosen)
}

/// Output of the hybrid (and classical-equivalent) compression pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct CompressionResult {
    pub selection: SparseSelection,
    /// `â_{y_j} / 𝒩` in ascending `S_k` order; unit norm.
    pub compressed: ComplexVector,
    pub reconstructed: ComplexVector,
    /// `|⟨ψ|ψ_approx⟩|²`.
    pub fidelity: f64,
    /// Spectral mass outside `S_k`, `Σ_{y∉S_k} |â_y|² = 1 − 𝒩²`.
    pub discarded_norm: f64,
}

/// Transform, keep the `k` dominant coefficients, renormalize, invert.
pub fn compress_hybrid(state: &ComplexVector, op: &GttOperator, k: usize) -> Result<CompressionResult> {
    state.check_unit_norm()?;
    let spectrum = op.apply(state)?;
    let selection = top_k_indices(&spectrum, k)?;
    compress_spectrum(state, op, &spectrum, selection)
}

/// Hybrid compression with a caller-chosen index set.
pub fn compress_hybrid_with(state: &ComplexVector, op: &GttOperator, indices: &[usize]) -> Result<CompressionResult> {
    state.check_unit_norm()?;
    let spectrum = op.apply(state)?;
    let selection = SparseSelection::from_indices(&spectrum, indices.to_vec())?;
    compress_spectrum(state, op, &spectrum, selection)
}

fn compress_spectrum(
    state: &ComplexVector,
    op: &GttOperator,
    spectrum: &ComplexVector,
    selection: SparseSelection,
) -> Result<CompressionResult> {
    if selection.mass() <= ZERO_MASS {
        return Err(GttError::EmptySelection);
    }
    let norm = selection.normalizer();
    let compressed = ComplexVector::new(selection.gather(spectrum).into_iter().map(|a| a / norm).collect())?;
    let reconstructed = reconstruct_from_classical(&selection, &compressed, op)?;
    let fidelity = fidelity(state, &reconstructed)?;
    let discarded_norm = spectrum
        .iter()
        .enumerate()
        .filter(|(i, _)| selection.rank_of(*i).is_none())
        .map(|(_, a)| a.norm_sqr())
        .sum();
    Ok(CompressionResult {
        selection,
        compressed,
        reconstructed,
        fidelity,
        discarded_norm,
    })
}

/// Sender side of the purely classical protocol: the `k` dominant indices
/// and their raw (not renormalized) amplitudes.
pub fn classical_encode(state: &ComplexVector, op: &GttOperator, k: usize) -> Result<(SparseSelection, ComplexVector)> {
    let spectrum = op.apply(state)?;
    let selection = top_k_indices(&spectrum, k)?;
    let amplitudes = ComplexVector::new(selection.gather(&spectrum))?;
    Ok((selection, amplitudes))
}

/// Scatter `compressed` onto `S_k` in a zero vector and apply `G_N†`.
pub fn reconstruct_from_classical(
    selection: &SparseSelection,
    compressed: &ComplexVector,
    op: &GttOperator,
) -> Result<ComplexVector> {
    compressed.check_len(selection.k())?;
    if let Some(&last) = selection.indices().last() {
        if last >= op.len() {
            return Err(GttError::BadSelection(format!("index {last} outside 0..{}", op.len())));
        }
    }
    let mut full = vec![ZERO; op.len()];
    for (&y, &a) in selection.indices().iter().zip(compressed.iter()) {
        full[y] = a;
    }
    op.apply_inverse(&ComplexVector::new(full)?)
}

/// Result of the simulated fully quantum protocol.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumSimOutcome {
    /// Probability of the ancilla reading `|1⟩`, i.e. `𝒩²`.
    pub success_probability: f64,
    /// Post-selected compressed register, first `k` amplitudes.
    pub transmitted: ComplexVector,
    pub reconstructed: ComplexVector,
}

/// Smallest `b^m ≥ k`, the dimension of an `⌈log_b k⌉`-qudit register.
fn register_dim(k: usize, b: usize) -> usize {
    let mut dim = 1;
    while dim < k {
        dim *= b;
    }
    dim
}

/// Permutation of `R_orig ⊗ R_comp` (index `y·K + c`) sending `|y_j⟩|0⟩` to
/// `|0⟩|j⟩`, completed to a bijection by pairing the leftover targets with
/// the leftover sources in ascending order.
fn map_permutation(selection: &SparseSelection, len: usize, comp: usize) -> Vec<usize> {
    let pos = |y: usize, c: usize| y * comp + c;
    let mut perm: Vec<usize> = (0..len * comp).collect();
    let sources: Vec<usize> = selection.indices().iter().map(|&y| pos(y, 0)).collect();
    let targets: Vec<usize> = (0..selection.k()).map(|j| pos(0, j)).collect();
    for (&s, &t) in sources.iter().zip(&targets) {
        perm[s] = t;
    }
    let spare_sources: Vec<usize> = targets.iter().copied().filter(|t| !sources.contains(t)).collect();
    let spare_targets: Vec<usize> = sources.iter().copied().filter(|s| !targets.contains(s)).collect();
    for (s, t) in spare_sources.into_iter().zip(spare_targets) {
        perm[s] = t;
    }
    perm
}

fn apply_permutation(state: &[Complex], perm: &[usize]) -> Vec<Complex> {
    let mut out = vec![ZERO; state.len()];
    for (src, &dst) in perm.iter().enumerate() {
        out[dst] = state[src];
    }
    out
}

/// Applies `op` to the register whose basis index is `y` in the layout
/// `y·stride + rest`, for every value of `rest`.
fn apply_on_leading_register(state: &mut [Complex], op: &GttOperator, stride: usize) {
    let mut slice = vec![ZERO; op.len()];
    for rest in 0..stride {
        for (y, slot) in slice.iter_mut().enumerate() {
            *slot = state[y * stride + rest];
        }
        if slice.iter().all(|z| *z == ZERO) {
            continue;
        }
        op.apply_in_place(&mut slice).expect("slice has operator length");
        for (y, v) in slice.iter().enumerate() {
            state[y * stride + rest] = *v;
        }
    }
}

/// Simulates the known-support quantum compression protocol on the joint
/// statevector `R_orig ⊗ q_a ⊗ R_comp` (index `(y·2 + a)·K + c`), then the
/// receiver's decode on `R_comp ⊗ R'_orig`.
pub fn compress_fully_quantum(
    state: &ComplexVector,
    op: &GttOperator,
    selection: &SparseSelection,
) -> Result<QuantumSimOutcome> {
    state.check_len(op.len())?;
    state.check_unit_norm()?;
    let len = op.len();
    let k = selection.k();
    if selection.indices().iter().any(|&y| y >= len) {
        return Err(GttError::BadSelection(format!("index outside 0..{len}")));
    }
    let comp = register_dim(k, op.base().dim());
    let idx = |y: usize, a: usize, c: usize| (y * 2 + a) * comp + c;

    let mut psi = vec![ZERO; len * 2 * comp];
    for (y, &amp) in state.iter().enumerate() {
        psi[idx(y, 0, 0)] = amp;
    }

    // transform phase
    apply_on_leading_register(&mut psi, op, 2 * comp);

    // oracle O_S flips the flag on the retained support
    for &y in selection.indices() {
        for c in 0..comp {
            psi.swap(idx(y, 0, c), idx(y, 1, c));
        }
    }

    // controlled map on the flagged branch
    let perm = map_permutation(selection, len, comp);
    let flagged: Vec<Complex> = (0..len * comp).map(|s| psi[idx(s / comp, 1, s % comp)]).collect();
    let mapped = apply_permutation(&flagged, &perm);
    for (s, v) in mapped.into_iter().enumerate() {
        psi[idx(s / comp, 1, s % comp)] = v;
    }

    // measure the flag, post-select |1⟩
    let success_probability: f64 = (0..len * comp)
        .map(|s| psi[idx(s / comp, 1, s % comp)].norm_sqr())
        .sum();
    if success_probability <= ZERO_MASS {
        return Err(GttError::EmptySelection);
    }
    let scale = success_probability.sqrt().recip();
    // R_orig is back in |0⟩ on this branch, so tracing it out leaves R_comp pure
    let transmitted: Vec<Complex> = (0..k).map(|c| psi[idx(0, 1, c)] * scale).collect();

    // decode: |j⟩|0⟩ → |j⟩|y_j⟩, then clear R_comp with |j⟩|y_j⟩ → |0⟩|y_j⟩
    let at = |c: usize, r: usize| c * len + r;
    let mut bob = vec![ZERO; comp * len];
    for (c, &amp) in transmitted.iter().enumerate() {
        bob[at(c, 0)] = amp;
    }
    let mut decoded = vec![ZERO; comp * len];
    for c in 0..comp {
        for r in 0..len {
            let r2 = if c < k { (r + selection.indices()[c]) % len } else { r };
            decoded[at(c, r2)] = bob[at(c, r)];
        }
    }
    let mut cleared = vec![ZERO; comp * len];
    for c in 0..comp {
        for r in 0..len {
            let c2 = match selection.rank_of(r) {
                Some(j) => (c + comp - j) % comp,
                None => c,
            };
            cleared[at(c2, r)] = decoded[at(c, r)];
        }
    }
    let approx = ComplexVector::new(cleared[..len].to_vec())?;
    let reconstructed = op.apply_inverse(&approx)?;

    Ok(QuantumSimOutcome {
        success_probability,
        transmitted: ComplexVector::new(transmitted)?,
        reconstructed,
    })
}

/// Low/high branches of the natural-order filter.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterOutput {
    pub cutoff: usize,
    /// Time-domain branch tagged by ancilla `|0⟩`; not renormalized.
    pub low_branch: ComplexVector,
    /// Time-domain branch tagged by ancilla `|1⟩`; not renormalized.
    pub high_branch: ComplexVector,
    pub low_spectrum: ComplexVector,
    pub high_spectrum: ComplexVector,
}

/// Splits `state` into spectral indices `< cutoff` and `≥ cutoff`.
pub fn filter_natural(state: &ComplexVector, op: &GttOperator, cutoff: usize) -> Result<FilterOutput> {
    filter_natural_with(state, op, cutoff, |_, _| {})
}

/// [`filter_natural`] with a hook that may edit the low and high spectra
/// before they are transformed back.
///
/// The joint `(1 + n)`-register state is simulated with the ancilla as the
/// most significant index: `|a⟩|y⟩ ↦ a·N + y`.
pub fn filter_natural_with<F>(
    state: &ComplexVector,
    op: &GttOperator,
    cutoff: usize,
    process: F,
) -> Result<FilterOutput>
where
    F: FnOnce(&mut [Complex], &mut [Complex]),
{
    let len = op.len();
    state.check_len(len)?;
    state.check_unit_norm()?;
    if cutoff == 0 || cutoff > len {
        return Err(GttError::BadCutoff { cutoff, len });
    }

    // |0⟩ ⊗ Ψ
    let mut joint = vec![ZERO; 2 * len];
    joint[..len].copy_from_slice(state);

    // X ⊗ G_N
    let (zero, one) = joint.split_at_mut(len);
    zero.swap_with_slice(one);
    op.apply_in_place(&mut joint[len..])?;

    // multi-controlled X on the ancilla for every natural index below the cutoff
    for y in 0..cutoff {
        joint.swap(y, len + y);
    }

    let (low, high) = joint.split_at_mut(len);
    process(low, high);
    let low_spectrum = ComplexVector::new(low.to_vec())?;
    let high_spectrum = ComplexVector::new(high.to_vec())?;

    // I ⊗ G_N†
    let inverse = op.adjoint();
    inverse.apply_in_place(low)?;
    inverse.apply_in_place(high)?;

    Ok(FilterOutput {
        cutoff,
        low_branch: ComplexVector::new(joint[..len].to_vec())?,
        high_branch: ComplexVector::new(joint[len..].to_vec())?,
        low_spectrum,
        high_spectrum,
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_1_SQRT_2;

    use super::*;
    use crate::base::{BaseMatrix, U3Params};

    fn real(v: &[f64]) -> ComplexVector {
        ComplexVector::from_real(v).unwrap()
    }

    #[test]
    fn fidelity_cases() {
        let e0 = ComplexVector::basis(2, 0).unwrap();
        let e1 = ComplexVector::basis(2, 1).unwrap();
        assert!((fidelity(&e0, &e0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(fidelity(&e0, &e1).unwrap(), 0.0);
        let plus = real(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
        assert!((fidelity(&e0, &plus).unwrap() - 0.5).abs() < 1e-15);
        assert!(matches!(
            fidelity(&e0, &real(&[1.0, 1.0])),
            Err(GttError::NotNormalized { .. })
        ));
        assert!(matches!(
            fidelity(&e0, &ComplexVector::basis(3, 0).unwrap()),
            Err(GttError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn top_k_cases() {
        let s = real(&[0.914, 0.0, 0.0, 0.406, 0.0, 0.0, 0.0, 0.0]);
        let sel = top_k_indices(&s, 2).unwrap();
        assert_eq!(sel.indices(), &[0, 3]);
        assert!((sel.mass() - (0.914f64.powi(2) + 0.406f64.powi(2))).abs() < 1e-15);

        let flat = real(&[0.5; 4]);
        assert_eq!(top_k_indices(&flat, 3).unwrap().indices(), &[0, 1, 2]);
        assert_eq!(top_k_indices(&flat, 0), Err(GttError::BadK { k: 0, len: 4 }));
        assert_eq!(top_k_indices(&flat, 5), Err(GttError::BadK { k: 5, len: 4 }));

        // a one-ulp difference is still a tie
        let nearly = real(&[0.1, 0.3, 0.3 + 5e-17, 0.2]);
        assert_eq!(top_k_indices(&nearly, 1).unwrap().indices(), &[1]);
    }

    #[test]
    fn selection_validation() {
        let s = [Complex::new(1.0, 0.0); 4];
        assert!(SparseSelection::from_indices(&s, vec![]).is_err());
        assert!(SparseSelection::from_indices(&s, vec![1, 1]).is_err());
        assert!(SparseSelection::from_indices(&s, vec![4]).is_err());
        let sel = SparseSelection::from_indices(&s, vec![3, 0]).unwrap();
        assert_eq!(sel.indices(), &[0, 3]);
        assert_eq!(sel.rank_of(3), Some(1));
        assert_eq!(sel.rank_of(2), None);
    }

    #[test]
    fn full_support_is_lossless() {
        let op = GttOperator::new(BaseMatrix::u3(U3Params::new(0.3, 0.2, 0.1)).unwrap(), 3).unwrap();
        let state = real(&[1.0, 2.0, -1.0, 0.5, 0.0, 3.0, 1.0, -2.0]).normalized().unwrap();
        let res = compress_hybrid(&state, &op, 8).unwrap();
        assert!((res.fidelity - 1.0).abs() < 1e-12);
        assert!(res.discarded_norm.abs() < 1e-12);
        assert!(res.reconstructed.max_abs_diff(&state) < 1e-12);

        let all: Vec<usize> = (0..8).collect();
        let sel = SparseSelection::from_indices(&op.apply(&state).unwrap(), all).unwrap();
        let q = compress_fully_quantum(&state, &op, &sel).unwrap();
        assert!((q.success_probability - 1.0).abs() < 1e-12);
        assert!(q.reconstructed.max_abs_diff(&state) < 1e-12);
    }

    #[test]
    fn worked_three_qubit_map() {
        // state whose spectrum is supported on {2, 5}
        let op = GttOperator::new(BaseMatrix::u3(U3Params::new(0.7, 0.4, 1.9)).unwrap(), 3).unwrap();
        let mut spec = vec![ZERO; 8];
        spec[2] = Complex::new(0.6, 0.0);
        spec[5] = Complex::new(0.0, 0.8);
        let state = op.apply_inverse(&ComplexVector::new(spec.clone()).unwrap()).unwrap();
        let sel = SparseSelection::from_indices(&spec, vec![2, 5]).unwrap();
        assert_eq!((sel.rank_of(2), sel.rank_of(5)), (Some(0), Some(1)));
        let q = compress_fully_quantum(&state, &op, &sel).unwrap();
        assert!(q.transmitted.max_abs_diff(&[spec[2], spec[5]]) < 1e-12);
        assert!((q.success_probability - 1.0).abs() < 1e-12);
        assert!(q.reconstructed.max_abs_diff(&state) < 1e-12);
    }

    #[test]
    fn zero_mass_selection_fails() {
        let op = GttOperator::new(BaseMatrix::hadamard(), 2).unwrap();
        let state = real(&[0.5, 0.5, 0.5, 0.5]);
        let spectrum = op.apply(&state).unwrap();
        let sel = SparseSelection::from_indices(&spectrum, vec![3]).unwrap();
        assert_eq!(compress_fully_quantum(&state, &op, &sel), Err(GttError::EmptySelection));
        assert_eq!(
            compress_hybrid_with(&state, &op, &[1, 2]),
            Err(GttError::EmptySelection)
        );
    }

    #[test]
    fn map_permutation_is_bijective() {
        let spectrum = [Complex::new(1.0, 0.0); 8];
        for idx in [vec![0, 1], vec![0, 3, 5], vec![2, 5], vec![1, 2, 3, 4, 7]] {
            let sel = SparseSelection::from_indices(&spectrum, idx).unwrap();
            let comp = register_dim(sel.k(), 2);
            let perm = map_permutation(&sel, 8, comp);
            let mut seen = vec![false; perm.len()];
            for &p in &perm {
                assert!(!seen[p]);
                seen[p] = true;
            }
            for (j, &y) in sel.indices().iter().enumerate() {
                assert_eq!(perm[y * comp], j);
            }
        }
    }

    #[test]
    fn classical_round_trip() {
        let op = GttOperator::new(BaseMatrix::dft(2).unwrap(), 2).unwrap();
        let state = real(&[0.1, 0.7, 0.7, 0.1]).normalized().unwrap();
        let (sel, amps) = classical_encode(&state, &op, 4).unwrap();
        let back = reconstruct_from_classical(&sel, &amps, &op).unwrap();
        assert!(back.max_abs_diff(&state) < 1e-15);
        let short = ComplexVector::zeros(3).unwrap();
        assert!(matches!(
            reconstruct_from_classical(&sel, &short, &op),
            Err(GttError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn filter_pass_through_and_errors() {
        let op = GttOperator::new(BaseMatrix::u3(U3Params::real(0.9)).unwrap(), 2).unwrap();
        let state = real(&[0.1, -0.4, 0.8, 0.2]).normalized().unwrap();
        let out = filter_natural(&state, &op, 4).unwrap();
        assert!(out.low_branch.max_abs_diff(&state) < 1e-15);
        assert!(out.high_branch.norm() < 1e-15);
        assert_eq!(
            filter_natural(&state, &op, 0),
            Err(GttError::BadCutoff { cutoff: 0, len: 4 })
        );
        assert_eq!(
            filter_natural(&state, &op, 5),
            Err(GttError::BadCutoff { cutoff: 5, len: 4 })
        );
        assert!(matches!(
            filter_natural(&real(&[1.0, 1.0, 0.0, 0.0]), &op, 2),
            Err(GttError::NotNormalized { .. })
        ));
    }

    #[test]
    fn filter_hook_sees_split_spectra() {
        let op = GttOperator::new(BaseMatrix::hadamard(), 2).unwrap();
        let state = real(&[0.5, 0.5, 0.5, -0.5]);
        let out = filter_natural_with(&state, &op, 2, |low, high| {
            assert_eq!(low.len(), 4);
            assert!(low[2..].iter().chain(&high[..2]).all(|z| *z == ZERO));
            high.fill(ZERO);
        })
        .unwrap();
        assert!(out.high_branch.norm() == 0.0);
        assert!(out.high_spectrum.norm() == 0.0);
    }
}
