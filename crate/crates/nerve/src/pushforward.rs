use dgn_ainfty::functor::compositions;
use dgn_ainfty::{epsilon, sign, AInfinity, FunctorLike};
use dgn_core::vector;

use crate::simplex::strings;
use crate::{NerveError, NerveSimplex};

/// `(g_*f)_S = Σ_r Σ_{p₁+…+p_r=k} (−1)^{ε_r(p)} g_r(f_{block₁}, …, f_{block_r})`,
/// blocks in written order (the last one starts at `i₀`).
pub fn pushforward(
    g: &dyn FunctorLike,
    src: &dyn AInfinity,
    tgt: &dyn AInfinity,
    s: &NerveSimplex,
) -> Result<NerveSimplex, NerveError> {
    if let Some(&x) = s.objects.iter().find(|&&x| x >= src.num_objects()) {
        return Err(NerveError::ObjectMismatch(format!("object {x} is not in the source category")));
    }
    let objects: Vec<usize> = s.objects.iter().map(|&x| g.object(x)).collect();
    if let Some(&y) = objects.iter().find(|&&y| y >= tgt.num_objects()) {
        return Err(NerveError::ObjectMismatch(format!("object {y} is not in the target category")));
    }
    let mut out = NerveSimplex::zero(tgt, objects);
    for st in strings(s.n) {
        let k = st.len() - 1;
        let mut acc = vector::zeros(out.get(&st)?.len());
        for sizes in compositions(k, k) {
            if sizes.len() > g.arity_cap() {
                continue;
            }
            let mut bounds = vec![0];
            for p in sizes.iter().rev() {
                bounds.push(bounds[bounds.len() - 1] + p);
            }
            let objs: Vec<usize> = bounds.iter().map(|&b| s.objects[st[b]]).collect();
            let mut args = Vec::with_capacity(sizes.len());
            for w in bounds.windows(2).rev() {
                args.push(s.get(&st[w[0]..=w[1]])?.as_slice());
            }
            vector::axpy(&mut acc, &sign(epsilon(&sizes)), &g.f(&objs, &args));
        }
        out.set(&st, acc);
    }
    Ok(out)
}
