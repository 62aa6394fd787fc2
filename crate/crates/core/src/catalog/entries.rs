//! Transcribed data and checklists, one function per entry.

use num_traits::{One, Zero};

use super::checks::{back, hermite_monic, laguerre_monic, qmat, Session, SEQUENCE_MAX};
use super::{hermite_delta, laguerre_delta, Ctx};
use crate::algebra::{GaussianRational, MatP, Poly, Q};
use crate::darboux::{conjugate, Caps, Direction};
use crate::diffop::MatDiffOp;
use crate::dw::{commuting_combinations, eigenvalue_poly, EigenMatrix};
use crate::error::Result;
use crate::report::{Check, Group};
use crate::weights::{Kernel, MatrixWeight};

pub(super) fn run(id: &str, ctx: &Ctx, caps: Caps) -> Result<Vec<Check>> {
    match id {
        "laguerre-4" => laguerre4(ctx, caps),
        "hermite-I" => hermite1(ctx, caps),
        "hermite-II" => hermite2(ctx, caps),
        "threebythree" => three_by_three(ctx, caps),
        "lag-directsum-nonstrong" => lag_direct_sum(ctx, caps),
        "beyond-1" => beyond1(ctx, caps),
        "beyond-2" => beyond2(ctx, caps),
        _ => unreachable!("dispatch covers every non-stub entry"),
    }
}

fn qn(n: usize) -> Q {
    Q::from_integer(n.into())
}

fn re(v: Q) -> GaussianRational {
    GaussianRational::real(v)
}

fn lam(op: &MatDiffOp) -> Result<EigenMatrix> {
    eigenvalue_poly(op)
}

fn hermite_source(size: usize) -> Result<MatrixWeight> {
    MatrixWeight::scalar(Kernel::Hermite, size)
}

/// Source and target weight of an entry.
pub(super) fn weights(id: &str, c: &Ctx) -> Result<(MatrixWeight, MatrixWeight)> {
    let hermite = |t: &[&str], size: usize| MatrixWeight::from_factor(Kernel::Hermite, c.mat(t), vec![Poly::one(); size]);
    Ok(match id {
        "laguerre-4" => {
            let kernel = Kernel::laguerre(c.get("alpha"));
            let src = MatrixWeight::new(kernel.clone(), c.mat(&["x", "0", "0", "1"]))?;
            let tgt = MatrixWeight::from_factor(kernel, c.mat(&["1", "a x", "0", "1"]), vec![Poly::x(), Poly::one()])?;
            (src, tgt)
        }
        "hermite-I" => (hermite_source(2)?, hermite(&["1", "a x^2", "0", "1"], 2)?),
        "hermite-II" => (hermite_source(2)?, hermite(&["1", "a x", "0", "1"], 2)?),
        "threebythree" => (hermite_source(3)?, hermite(&["1", "a x", "0", "0", "1", "b x", "0", "0", "1"], 3)?),
        "lag-directsum-nonstrong" => {
            let kernel = Kernel::laguerre(c.get("alpha"));
            (MatrixWeight::scalar(kernel.clone(), 2)?, MatrixWeight::new(kernel, c.mat(&["x", "0", "0", "1"]))?)
        }
        "beyond-1" => {
            let h = c.mat(&["a^4 x^4+3a^2 x^2+1", "a^3 x^3+2a x", "a^3 x^3+2a x", "a^2 x^2+1"]);
            (hermite_source(2)?, MatrixWeight::new(Kernel::Hermite, h)?)
        }
        "beyond-2" => (hermite_source(2)?, hermite(&["1", "-x(a x+b)", "0", "1"], 2)?),
        _ => unreachable!("dispatch covers every non-stub entry"),
    })
}

/// Target and source of the Laguerre example, operators, and checks.
fn laguerre4(c: &Ctx, caps: Caps) -> Result<Vec<Check>> {
    let alpha = c.get("alpha");
    let (src, tgt) = weights("laguerre-4", c)?;
    let mut s = Session::new(src, tgt, caps)?;

    let v = c.op(&[&["0", "x", "-1", "a x"], &["-1/a", "alpha+1", "0", "1/a"]]);
    let n_shown = c.op(&[&["-a x", "x", "-1", "0"], &["-a-1/a", "alpha+1", "0", "1/a"]]);
    let d_shown = c.op(&[
        &["-x", "0", "0", "-x"],
        &["-(alpha+2-x)", "0", "0", "-(alpha+1-x)"],
        &["1+1/a^2", "0", "0", "1/a^2"],
    ]);
    let cert = s.certificate(&v, true)?;
    s.companion_displayed(&cert, &n_shown);
    s.factorization(&v, cert.companion()?, &d_shown);

    let e = [
        c.op(&[&["-1", "0", "0", "-1"]]),
        c.op(&[&["1", "0", "0", "0"]]),
        c.op(&[&["0", "x", "-1", "0"], &["0", "alpha+1", "1", "0"]]),
        c.op(&[&["0", "0", "0", "1"]]),
        c.op(&[&["0", "i x", "i", "0"], &["0", "i(alpha+1)", "-i", "0"]]),
    ];
    for (k, ek) in e.iter().enumerate() {
        s.member(&format!("E{}", k + 1), ek, false, true);
    }
    let shown = [
        c.op(&[
            &["x", "0", "0", "x"],
            &["alpha+2-x", "a x", "0", "alpha+1-x"],
            &["-(a^2+1)/a^2", "a(alpha+1)", "0", "-1/a^2"],
        ]),
        c.op(&[
            &["0", "-a x^2", "0", "-x"],
            &["x", "-x(a^2 alpha+3a^2+1)/a", "1/a", "-alpha-1"],
            &["(a^2+1)/a^2", "-(a^2+1)(alpha+1)/a", "0", "0"],
        ]),
        c.op(&[
            &["a x^2", "-x^2(a^2 x+1)", "x", "-a x^2"],
            &["a x(alpha+5)+2x/a", "-a^2 x^2(alpha+5)-x(2alpha+x+4)", "2+alpha", "-a x(alpha+2)-2x/a"],
            &["(2(a^2+1)(2+alpha)-x)/a", "-x/a^2-2(a^2(alpha+2)+1)x-(alpha+2)(alpha+1)", "1/a^2", "(x-2(alpha+1))/a"],
            &["-(alpha+1)/a", "(alpha+1)(a^2 alpha-1)/a^2", "-1/a^2", "(alpha+1)/a"],
        ]),
        c.op(&[
            &["-x", "a x^2", "0", "0"],
            &["-alpha-2", "x(a^2 alpha+2a^2+1)/a", "-1/a", "x"],
            &["0", "(alpha+1)/a", "0", "1/a^2"],
        ]),
        c.op(&[
            &["i a x^2", "-i x^2(a^2 x-1)", "i x", "-i a x^2"],
            &["i a(alpha+5)x", "-i x(a^2 alpha x+5a^2 x-2alpha+3x-4)", "i(alpha+2)", "-i a(alpha+2)x"],
            &["i(2a^2 alpha+4a^2+x)/a", "-i x/a^2-i(alpha+2)(2a^2 x-alpha+4x-1)", "-i/a^2", "-i x/a"],
            &["i(alpha+1)/a", "-i(alpha+1)(a^2 alpha+2a^2+1)/a^2", "i/a^2", "-i(alpha+1)/a"],
        ]),
    ];
    let mut d = Vec::new();
    for (k, (ek, sk)) in e.iter().zip(&shown).enumerate() {
        let name = format!("D{}", k + 1);
        let dk = s.conjugate_displayed(&name, ek, &cert, sk)?;
        s.member(&name, &dk, true, true);
        d.push(dk);
    }
    s.relation("D4 = −D1 − D2", lam(&d[3]), Ok(lam(&d[0])?.add(&lam(&d[1])?).scale(&re(-Q::one()))));
    let (l1, l3) = (lam(&d[0])?, lam(&d[2])?);
    s.relation("D5 = i(D3D1 − D1D3)", lam(&d[4]), Ok(l3.commutator(&l1).scale(&GaussianRational::i())));

    let l_hi = laguerre_monic(SEQUENCE_MAX, &(&alpha + Q::one()));
    let l_lo = laguerre_monic(SEQUENCE_MAX, &alpha);
    let a = c.get("a");
    s.sequence(&cert, |n| {
        let (p1, p0) = (&l_hi[n], &l_lo[n]);
        MatP::from_rows(vec![
            vec![p1.scale_q(&-a.recip()), &p1.scale_q(&(&alpha + Q::one())) + &(&Poly::x() * &p1.derivative())],
            vec![-p0.derivative(), &p0.scale_q(&a.recip()) + &(&Poly::x() * &p0.derivative()).scale_q(&a)],
        ])
    });
    s.three_term();
    Ok(s.checks)
}

fn hermite1(c: &Ctx, caps: Caps) -> Result<Vec<Check>> {
    let a = c.get("a");
    let (src, tgt) = weights("hermite-I", c)?;
    let mut s = Session::new(src, tgt, caps)?;
    let delta = hermite_delta();

    let v = c.op(&[&["0", "1", "-1", "a x^2"], &["0", "-4x", "0", "0"], &["4/a", "-2", "0", "4/a"]]);
    let n_shown = c.op(&[&["a x^2", "-1", "1", "0"], &["4a x", "4x", "0", "0"], &["2a+4/a", "2", "0", "4/a"]]);
    let d_shown = c.in_delta(&delta, &["d^2-6d+8+16/a^2", "0", "0", "d^2+2d+16/a^2"]);
    let cert = s.certificate(&v, true)?;
    s.companion_displayed(&cert, &n_shown);
    s.factorization(&v, cert.companion()?, &d_shown);

    let d1 = c.op(&[&["1", "0", "0", "1"], &["-2x", "4a x", "0", "-2x"], &["0", "2a", "0", "4"]]);
    s.member("D1", &d1, true, true);
    let e = [
        c.op(&[&["0", "1", "1", "0"]]),
        c.op(&[&["0", "0", "0", "1"]]),
        c.op(&[&["1", "0", "0", "0"]]),
        c.op(&[&["0", "i", "-i", "0"]]),
    ];
    let shown = [
        c.op(&[
            &["-a x^2", "a^2 x^4-1", "-1", "a x^2"],
            &["-8a x", "8a^2 x^3+8x", "0", "0"],
            &["-12a-8/a", "12a^2 x^2-8x^2+12", "0", "8/a"],
            &["16x/a", "-16x", "0", "-16x/a"],
            &["8/a", "4+16/a^2", "16/a^2", "-8/a"],
        ]),
        c.op(&[
            &["1", "-a x^2", "0", "0"],
            &["-4x", "4a x^3", "0", "0"],
            &["-10", "10a x^2-4/a", "-4/a", "4x^2"],
            &["0", "16x/a", "0", "0"],
            &["0", "8/a", "0", "16/a^2"],
        ]),
        c.op(&[
            &["0", "a x^2", "0", "1"],
            &["0", "-4a x^3+8a x", "0", "-4x"],
            &["4x^2", "-26a x^2+12a+4/a", "4/a", "-2"],
            &["16x", "-16x(2a^2+1)/a", "0", "0"],
            &["8(a^2+2)/a^2", "-4(a^2+2)/a", "0", "0"],
        ]),
        c.op(&[
            &["-i a x^2", "i(a^2 x^4+1)", "-i", "i a x^2"],
            &["-8i a x", "i(8a^2 x^3-8x)", "0", "0"],
            &["-12i a", "i(12a^2 x^2+24x^2-12)", "0", "0"],
            &["-16i x/a", "48i x", "0", "16i x/a"],
            &["-8i/a", "i(12+16/a^2)", "-16i/a^2", "8i/a"],
        ]),
    ];
    let mut d = vec![d1];
    for (k, (ek, sk)) in e.iter().zip(&shown).enumerate() {
        let name = format!("D{}", k + 2);
        let dk = s.conjugate_displayed(&name, ek, &cert, sk)?;
        s.member(&name, &dk, true, true);
        d.push(dk);
    }
    let l: Vec<EigenMatrix> = d.iter().map(lam).collect::<Result<_>>()?;

    s.eigen_displayed("D1", &d[0], &c.eig(&["-2n", "4a n+2a", "0", "-2n+4"]));
    s.eigen_displayed(
        "D2",
        &d[1],
        &c.eig(&["8(2n+1)/a", "(a^2 n^2+2a^2 n-4)(a^2 n^2-a^2-4)/a^2", "16/a^2", "-8(2n+1)/a"]),
    );
    s.eigen_displayed("D3", &d[2], &c.eig(&["0", "(4n+2)(a^2 n^2-a^2 n+4)/a", "0", "(4a^2 n^2-4a^2 n+16)/a^2"]));

    let id = EigenMatrix::identity(2);
    let k8 = c.c("8(a^2+2)/a^2");
    let k16 = c.c("16/a^2");
    let quad = l[0].pow(2).sub(&l[0].scale(&re(qn(6)))).add(&id.scale(&k8));
    s.relation("Λ(D4) = Λ(D1)² − 6Λ(D1) − Λ(D3) + 8(a²+2)/a² I", Ok(l[3].clone()), Ok(quad.sub(&l[2])));
    let comm = l[1].commutator(&l[0]);
    let rhs5 = comm.scale(&c.c("-i/4"));
    s.displayed_or_corrected(
        "Λ(D5) = −(i/4)(Λ(D2)Λ(D1) − Λ(D1)Λ(D2))",
        Group::Relation,
        Ok((l[4] == rhs5, format!("Λ(lhs) = {}, Λ(rhs) = {rhs5}", l[4]))),
        Ok(l[4] == comm.scale(&c.c("i/4"))),
        "holds with the opposite sign, Λ(D5) = (i/4)(Λ(D2)Λ(D1) − Λ(D1)Λ(D2)), for the displayed D5",
    );
    let p_plus = l[0].pow(2).add(&l[0].scale(&re(qn(2)))).add(&id.scale(&k16));
    let p_minus = l[0].pow(2).sub(&l[0].scale(&re(qn(6)))).add(&id.scale(&(&re(qn(8)) + &k16)));
    let rhs13 = p_plus
        .mul(&p_minus)
        .scale(&c.c("1/16"))
        .sub(&l[1].pow(2).scale(&c.c("1/16")))
        .add(&l[2].scale(&re(qn(3))));
    s.relation("D1D3 = (1/16)(D1²+2D1+16/a²)(D1²−6D1+8+16/a²) − D2²/16 + 3D3", Ok(l[0].mul(&l[2])), Ok(rhs13));
    s.relation("D1D3 = D3D1", Ok(l[0].mul(&l[2])), Ok(l[2].mul(&l[0])));
    let bracket = l[0].mul(&l[1]).sub(&l[1].mul(&l[0])).sub(&l[1].scale(&re(qn(4))));
    s.relation(
        "D2D3 = −(1/8)(D1D2 − D2D1 − 4D2)(D1² − 6D1 + 8(a²+2)/a²)",
        Ok(l[1].mul(&l[2])),
        Ok(bracket.mul(&quad).scale(&c.c("-1/8"))),
    );
    let rhs32 = l[0]
        .pow(2)
        .mul(&l[1])
        .sub(&l[0].mul(&l[1]).scale(&re(qn(6))))
        .add(&l[1].scale(&k8))
        .add(&quad.mul(&bracket).scale(&c.c("1/8")));
    s.relation(
        "D3D2 = D1²D2 − 6D1D2 + 8(a²+2)/a² D2 + (1/8)(D1² − 6D1 + 8(a²+2)/a²)(D1D2 − D2D1 − 4D2)",
        Ok(l[2].mul(&l[1])),
        Ok(rhs32),
    );

    // Center: Z1, Z2, Z3 built as operators.
    let (d1, d2, d3) = (&d[0], &d[1], &d[2]);
    let z1 = d1
        .pow(3)
        .sub(&d1.pow(2).scale(&re(qn(3))))
        .sub(&d1.scale(&c.c("(4a^2-48)/a^2")))
        .sub(&d3.scale(&re(qn(12))));
    let z2 = d2.pow(2);
    let z3_with = |c3: &MatDiffOp, k1: &str| -> Result<MatDiffOp> {
        Ok(d1
            .pow(5)
            .sub(&d3.pow(2).scale(&re(qn(20))))
            .sub(&d3.compose(d1)?.scale(&re(qn(80))))
            .sub(&c3.scale(&c.c("20(a^2-8)/(3a^2)")))
            .sub(&d1.pow(2).scale(&re(qn(40))))
            .add(&d1.scale(&c.c(k1))))
    };
    let z3 = z3_with(d3, "32(a^4+40a^2+120)/(3a^2)")?;
    let z3_fixed = z3_with(&d1.pow(3), "32(a^4+40a^2+120)/(3a^4)")?;
    let z_shown = [
        c.eig(&["-4n(2n^2+3n-2+24/a^2)", "0", "0", "-4n(2n^2+3n-2+24/a^2)"]),
        c.eig(&["16(n^2+3n+2+4/a^2)(n^2-n+4/a^2)", "0", "0", "16(n^2+3n+2+4/a^2)(n^2-n+4/a^2)"]),
        c.eig(&[
            "-32/3 n(3n^4-5n^2+15n+2+40n^2/a^2+80/a^2+240/a^4)",
            "0",
            "0",
            "-32/3 n(3n^4-5n^2+15n+2+40n^2/a^2+80/a^2+240/a^4)",
        ]),
    ];
    let central = |lz: &EigenMatrix| lz.is_scalar() && l[..3].iter().all(|g| lz.commutes_with(g));
    for (k, (z, zs)) in [&z1, &z2].into_iter().zip(&z_shown).enumerate() {
        let name = format!("Z{}", k + 1);
        s.eigen_displayed(&name, z, zs);
        let r = lam(z).map(|lz| (central(&lz), format!("Λ({name}) = {lz}")));
        s.record(format!("{name} is central (scalar Λ commuting with D1, D2, D3)"), Group::Center, r);
    }
    let (lz, lf) = (lam(&z3)?, lam(&z3_fixed)?);
    let fix = "holds for Z3 with D1³ in place of D3 and 3a⁴ in place of 3a² in the D1 coefficient";
    s.displayed_or_corrected(
        "Λ(Z3) matches the displayed formula",
        Group::Eigenvalue,
        Ok((lz == z_shown[2], format!("computed Λ = {lz}"))),
        Ok(lf == z_shown[2]),
        fix,
    );
    s.displayed_or_corrected(
        "Z3 is central (scalar Λ commuting with D1, D2, D3)",
        Group::Center,
        Ok((central(&lz), format!("Λ(Z3) = {lz}"))),
        Ok(central(&lf)),
        fix,
    );
    let combos = commuting_combinations(&[l[0].pow(2), l[0].clone(), id.clone()], &l[1]);
    let only_scalars = combos.iter().all(|v| v[0].is_zero() && v[1].is_zero());
    s.record(
        "no β1 D1² + β2 D1 + μ I with (β1, β2) ≠ 0 commutes with D2",
        Group::Center,
        Ok((only_scalars, format!("commuting combinations {combos:?}"))),
    );

    let h = hermite_monic(SEQUENCE_MAX);
    let seq = s.sequence(&cert, |n| {
        let (h0, h1, h2) = (back(&h, n, 0), back(&h, n, 1), back(&h, n, 2));
        let nn = qn(n);
        let nn1 = &nn * (&nn - Q::one());
        let x = Poly::x();
        MatP::from_rows(vec![
            vec![
                h0.scale_q(&(qn(4) / &a)),
                &(&h0.scale_q(&qn(2)).scale_q(&-Q::one()) - &(&x * &h1).scale_q(&(qn(4) * &nn))) + &h2.scale_q(&nn1),
            ],
            vec![h2.scale_q(&-nn1.clone()), &h0.scale_q(&(qn(4) / &a)) + &(&(&x * &x) * &h2).scale_q(&(&a * &nn1))],
        ])
    });
    if let Some(seq) = &seq {
        let bad = (0..=SEQUENCE_MAX).find(|&n| {
            let nn = qn(n);
            let shown = qmat(vec![
                vec![qn(4) / &a, -qn(2) - qn(4) * &nn],
                vec![Q::zero(), qn(4) / &a + &a * &nn * (&nn - Q::one())],
            ]);
            seq[n].coeff(n) != shown
        });
        s.record(
            "leading coefficient of P_n·V matches the displayed formula",
            Group::Sequence,
            Ok((bad.is_none(), format!("first mismatch at n = {bad:?}"))),
        );
        let a2 = &a * &a;
        let den = |n: &Q| &a2 * n * n + &a2 * n + qn(4);
        let a_n = |n: usize| {
            let nn = qn(n);
            qmat(vec![
                vec![Q::one(), qn(4) * &a / den(&nn)],
                vec![Q::zero(), (&a2 * &nn * &nn - &a2 * &nn + qn(4)) / den(&nn)],
            ])
        };
        let c_n = |n: usize| {
            let nn = qn(n);
            qmat(vec![
                vec![&nn * (&a2 * &nn * &nn + qn(3) * &a2 * &nn + qn(2) * &a2 + qn(4)) / (qn(2) * den(&nn)), Q::zero()],
                vec![qn(2) * &a * &nn / den(&nn), &nn / qn(2)],
            ])
        };
        s.recurrence_displayed(seq, a_n, c_n);
    }
    s.three_term();
    s.solver(2, 2, &[MatDiffOp::identity(2), d[0].clone()]);
    Ok(s.checks)
}

fn hermite2(c: &Ctx, caps: Caps) -> Result<Vec<Check>> {
    let a = c.get("a");
    let (src, tgt) = weights("hermite-II", c)?;
    let mut s = Session::new(src, tgt, caps)?;
    let delta = hermite_delta();

    let v = c.op(&[&["0", "1", "1", "-a x"], &["-2/a", "0", "0", "-2/a"]]);
    let n_shown = c.op(&[&["-a x", "-1", "-1", "0"], &["-a-2/a", "0", "0", "-2/a"]]);
    let d_shown = c.in_delta(&delta, &["-d+2+4/a^2", "0", "0", "-d+4/a^2"]);
    let cert = s.certificate(&v, true)?;
    s.companion_displayed(&cert, &n_shown);
    s.factorization(&v, cert.companion()?, &d_shown);

    let e = [
        c.op(&[&["0", "1", "1", "0"]]),
        c.op(&[&["0", "0", "0", "1"]]),
        c.op(&[&["1", "0", "0", "0"]]),
        c.op(&[&["0", "i", "-i", "0"]]),
    ];
    let shown = [
        c.op(&[&["-a x", "a^2 x^2-1", "-1", "a x"], &["-2a", "2a^2 x+4x", "0", "0"], &["0", "2+4/a^2", "4/a^2", "0"]]),
        c.op(&[&["-1", "a x", "0", "0"], &["0", "2/a", "-2/a", "2x"], &["0", "0", "0", "4/a^2"]]),
        c.op(&[&["0", "-a x", "0", "-1"], &["2x", "-2a-2/a", "2/a", "0"], &["2+4/a^2", "0", "0", "0"]]),
        c.op(&[
            &["-i a x", "i(a^2 x^2+1)", "-i", "i a x"],
            &["-i(2a+4/a)", "i(2a^2 x+4x)", "0", "4i/a"],
            &["0", "i(2+4/a^2)", "-4i/a^2", "0"],
        ]),
    ];
    let mut d = Vec::new();
    for (k, (ek, sk)) in e.iter().zip(&shown).enumerate() {
        let name = format!("D{}", k + 1);
        let dk = s.conjugate_displayed(&name, ek, &cert, sk)?;
        s.member(&name, &dk, true, true);
        d.push(dk);
    }
    let d5_shown = c.op(&[&["1", "0", "0", "1"], &["-2x", "2a", "0", "-2x"], &["-2-4/a^2", "0", "0", "-4/a^2"]]);
    let d5 = d[1].add(&d[2]).neg();
    s.record(
        "D5 = −(D2 + D3) matches the displayed operator",
        Group::Membership,
        Ok((d5 == d5_shown, format!("computed {d5}"))),
    );
    s.member("D5", &d5, true, true);
    let l: Vec<EigenMatrix> = d.iter().chain(std::iter::once(&d5)).map(lam).collect::<Result<_>>()?;
    let (l1, l2, l3, l4, l5) = (&l[0], &l[1], &l[2], &l[3], &l[4]);
    s.relation(
        "D3 = ¼(D5² − D1²) − ½D5",
        Ok(l3.clone()),
        Ok(l5.pow(2).sub(&l1.pow(2)).scale(&c.c("1/4")).sub(&l5.scale(&c.c("1/2")))),
    );
    s.relation("D2 = −D3 − D5", Ok(l2.clone()), Ok(l3.add(l5).scale(&re(-Q::one()))));
    s.relation("D4 = (i/2)(D1D5 − D5D1)", Ok(l4.clone()), Ok(l1.commutator(l5).scale(&c.c("i/2"))));

    let h = hermite_monic(SEQUENCE_MAX);
    let seq = s.sequence(&cert, |n| {
        let (h0, h1) = (back(&h, n, 0), back(&h, n, 1));
        let nn = qn(n);
        let m2a = -qn(2) / &a;
        MatP::from_rows(vec![
            vec![h0.scale_q(&m2a), h1.scale_q(&nn)],
            vec![h1.scale_q(&nn), &h0.scale_q(&m2a) - &(&Poly::x() * &h1).scale_q(&(&a * &nn))],
        ])
    });
    if let Some(seq) = &seq {
        let bad = (0..=SEQUENCE_MAX).find(|&n| {
            seq[n].coeff(n) != qmat(vec![vec![-qn(2) / &a, Q::zero()], vec![Q::zero(), -qn(2) / &a - &a * qn(n)]])
        });
        s.record(
            "leading coefficient of P_n·V matches the displayed formula",
            Group::Sequence,
            Ok((bad.is_none(), format!("first mismatch at n = {bad:?}"))),
        );
    }
    s.three_term();
    Ok(s.checks)
}

fn three_by_three(c: &Ctx, caps: Caps) -> Result<Vec<Check>> {
    let (src, tgt) = weights("threebythree", c)?;
    let mut s = Session::new(src, tgt, caps)?;
    let delta = hermite_delta();

    let v = c.op(&[
        &["0", "0", "0", "0", "0", "0", "0", "0", "1"],
        &["0", "0", "0", "1", "-a x", "a b x^2", "0", "0", "-4x"],
        &["0", "1", "-b x", "0", "0", "0", "-4/(a b)", "4x/b", "-2(a^2+2)/a^2"],
        &["-2/a", "0", "0", "-4/a^2", "0", "4/(a b)", "0", "8/(b a^2)", "0"],
    ]);
    let n_shown = c.op(&[
        &["0", "0", "0", "0", "0", "-b x", "0", "0", "-1"],
        &["0", "1", "0", "0", "0", "b(2x^2-3)", "0", "0", "2x"],
        &["-a x", "-4x", "4/(a b)", "-1", "0", "4b x(a^2+1)/a^2", "0", "0", "4/a^2"],
        &["-(a^2+2)/a", "-2(a^2+2)/a^2", "0", "0", "0", "4(b^2+2)/(b a^2)", "0", "4/(a b)", "0"],
    ]);
    let d_shown = c.in_delta(
        &delta,
        &[
            "-d+2(a^2+2)/a^2",
            "-2d/a+4(a^2+2)/a^3",
            "0",
            "-2d/a+4(a^2+2)/a^3",
            "d^2+8(a^2 b^2+2(a^2+b^2))/(a^4 b^2)",
            "0",
            "0",
            "0",
            "-d^3+2(a^2+4)d^2/a^2-8(a^2+2)d/a^4",
        ],
    );
    let cert = s.certificate(&v, false)?;
    s.companion_displayed(&cert, &n_shown);
    let d_fixed = c.in_delta(
        &delta,
        &[
            "-d+2(a^2+2)/a^2",
            "-2d/a+4(a^2+2)/a^3",
            "0",
            "-2d/a+4(a^2+2)/a^3",
            "d^2+2(a^2-4)d/a^2+8(a^2 b^2+2(a^2+b^2))/(a^4 b^2)",
            "0",
            "0",
            "0",
            "-d^3+2(a^2+4)d^2/a^2-16((a^2+1)b^2+a^2)d/(a^4 b^2)+32(b^2+2)/(a^4 b^2)",
        ],
    );
    s.factorization_corrected(
        &v,
        cert.companion()?,
        &d_shown,
        &d_fixed,
        "holds with 2(a²−4)/a²·δ added to entry (2,2) and entry (3,3) equal to \
         −δ³ + 2(a²+4)/a²·δ² − 16((a²+1)b²+a²)/(a⁴b²)·δ + 32(b²+2)/(a⁴b²)",
    );
    s.record(
        "the leading coefficient of V is singular",
        Group::NonStrong,
        Ok((!cert.flags.v_leading_nonsingular, String::new())),
    );
    let odd_member = |e: &MatDiffOp| {
        conjugate(e, &cert, Direction::Down).map(|op| {
            let o = op.order();
            (o.is_some_and(|o| o % 2 == 1), format!("order {o:?}: {op}"))
        })
    };
    let e12 = odd_member(&c.op(&[&["0", "1", "0", "0", "0", "0", "0", "0", "0"]]));
    let e12_ok = e12.as_ref().is_ok_and(|r| r.0);
    s.record("N∘E12∘V is a member of odd order", Group::NonStrong, e12);
    s.displayed_or_corrected(
        "N∘E22∘V is a member of odd order",
        Group::NonStrong,
        odd_member(&c.op(&[&["0", "0", "0", "0", "1", "0", "0", "0", "0"]])),
        Ok(e12_ok),
        "N∘E22∘V is an even-order member; the off-diagonal unit E12 gives the odd-order member",
    );

    let h = hermite_monic(SEQUENCE_MAX);
    let (a, b) = (c.get("a"), c.get("b"));
    // `k21` is the H_n coefficient in entry (2,1); `h3` adds H_n‴ to entry (3,3).
    let closed = |k21: Q, h3: bool| {
        let (a, b, h) = (a.clone(), b.clone(), &h);
        move |n: usize| {
            let h0 = h[n].clone();
            let (h1, h2) = (h0.derivative(), h0.nth_derivative(2));
            let x = Poly::x();
            let ab = &a * &b;
            let mut e33 = &(&x * &h2).scale_q(&-qn(4)) - &h1.scale_q(&(qn(2) * (&a * &a + qn(2)) / (&a * &a)));
            if h3 {
                e33 = &e33 + &h0.nth_derivative(3);
            }
            MatP::from_rows(vec![
                vec![h0.scale_q(&(-qn(2) / &a)), h1.clone(), (&x * &h1).scale_q(&-b.clone())],
                vec![
                    &h2 + &h0.scale_q(&k21),
                    (&x * &h2).scale_q(&-a.clone()),
                    &(&(&x * &x) * &h2).scale_q(&ab) + &h0.scale_q(&(qn(4) / &ab)),
                ],
                vec![
                    h1.scale_q(&(-qn(4) / &ab)),
                    &(&x * &h1).scale_q(&(qn(4) / &b)) + &h0.scale_q(&(qn(8) / (&b * &a * &a))),
                    e33,
                ],
            ])
        }
    };
    let shown = closed(-qn(4) / (&a * &b), false);
    let fixed = closed(-qn(4) / (&a * &a), true);
    s.sequence_corrected(
        &cert,
        shown,
        Some((fixed, "holds with −4/a² in place of −4/(ab) in entry (2,1) and H_n‴ added to entry (3,3)")),
    );
    s.three_term();
    Ok(s.checks)
}

fn lag_direct_sum(c: &Ctx, caps: Caps) -> Result<Vec<Check>> {
    let (src, tgt) = weights("lag-directsum-nonstrong", c)?;
    let mut s = Session::new(src, tgt, caps)?;
    let v = c.op(&[&["1", "0", "0", "0"], &["-1", "0", "0", "1"]]);
    let cert = s.certificate(&v, false)?;
    s.record(
        "the leading coefficient of V is singular",
        Group::NonStrong,
        Ok((!cert.flags.v_leading_nonsingular, String::new())),
    );
    let e = c.op(&[&["0", "0", "1", "0"], &["0", "0", "-1", "0"]]);
    s.member("(0, 0; ∂ − 1, 0)", &e, true, false);
    s.record("(0, 0; ∂ − 1, 0) has odd order", Group::NonStrong, Ok((e.order() == Some(1), String::new())));
    let delta = laguerre_delta(&c.get("alpha"));
    let d = MatDiffOp::from_scalar(&delta, 2);
    s.member("δ_α I", &d, false, true);
    s.three_term();
    Ok(s.checks)
}

fn beyond1(c: &Ctx, caps: Caps) -> Result<Vec<Check>> {
    let (src, tgt) = weights("beyond-1", c)?;
    let mut s = Session::new(src, tgt, caps)?;
    let delta = hermite_delta();
    let v = c.op(&[
        &["1", "-a x", "-a x", "a^2 x^2+1"],
        &["-2x", "2a x^2-4/a", "2a x^2-4/a", "-2a^2 x^3+2x"],
        &["-6", "6(a^2+2)x/a", "6(a^2+2)x/a", "-6(a^2+2)x^2-6"],
        &["-8x/a^2", "(12a^2+16)/a^3", "(12a^2+16)/a^3", "-(12a^2+24)x/a^2"],
        &["-16/a^4", "0", "0", "-16/a^4"],
    ]);
    let d_shown = c.in_delta(
        &delta,
        &[
            "(a^2 d-4)(a^6 d^3-6(a^6+2a^4)d^2+8(a^6+6a^4+6a^2)d-16(3a^4+6a^2+4))/a^8",
            "0",
            "0",
            "(a^6 d^3-12a^4 d^2+(-4a^6+48a^2)d-64)(a^2 d-2a^2-4)/a^8",
        ],
    );
    let cert = s.certificate(&v, true)?;
    s.factorization(&v, cert.companion()?, &d_shown);
    let d4 = c.op(&[
        &["1", "0", "0", "1"],
        &["4a^2 x-4x", "-4a^3 x^2+4a", "4a", "-4a^2 x-4x"],
        &["12a^2+4x^2-8/a^2", "-12a^3 x-24a x", "0", "4x^2-12-8/a^2"],
        &["12x+16x/a^2", "-24a-32/a", "0", "4x+16x/a^2"],
        &["4+16/a^2", "0", "0", "0"],
    ]);
    s.member("fourth-order D", &d4, true, true);
    let h = hermite_monic(SEQUENCE_MAX);
    let v2 = v.clone();
    s.sequence(&cert, |n| v2.apply_poly(&MatP::scalar(2, h[n].clone())).expect("polynomial operator"));
    s.three_term();
    s.solver(2, 1, &[MatDiffOp::identity(2)]);
    Ok(s.checks)
}

fn beyond2(c: &Ctx, caps: Caps) -> Result<Vec<Check>> {
    let (src, tgt) = weights("beyond-2", c)?;
    let mut s = Session::new(src, tgt, caps)?;
    let delta = hermite_delta();
    let v = c.op(&[
        &["1", "x(a x+b)", "0", "1"],
        &["-2x", "-2a x^3-2b x^2", "0", "-6x"],
        &["-6", "-6a x^2-6b x+8/a", "-8/a", "4x^2-8b x/a-6"],
        &["0", "-(24a x+8b)/a^2", "-(-8a x+8b)/a^2", "-(8b^2-12a^2)x/a^2"],
        &["-16/a^2", "-16/a", "0", "-16/a^2"],
    ]);
    let off = "-(24a^2 d^2-48a^2 d-128)/a^3";
    let d_shown = c.in_delta(
        &delta,
        &[
            "d^4-2d^3+4(-a^2+8)d^2/a^2+8(a^4-20a^2-8b^2)d/a^4+64(3a^2+2b^2+4)/a^4",
            off,
            off,
            "d^4-6d^3+8(a^2+4)d^2/a^2+32(a^2-2b^2)d/a^4+256/a^4",
        ],
    );
    let cert = s.certificate(&v, true)?;
    s.factorization(&v, cert.companion()?, &d_shown);
    let d6 = c.op(&[
        &["1", "0", "0", "1"],
        &["-6x", "-12a x-6b", "0", "-6x"],
        &["12x^2-24", "42a x^2+12b x-30a", "0", "12x^2-6"],
        &["-4x(2x^2-21)", "-24a x^3+24b x^2+168a x+24b", "0", "-4x(2x^2-3)"],
        &[
            "-(48a^2 x^2-24a b x-108a^2-48)/a^2",
            "-(108a^2 x^2-24b^2 x^2-72a b x-72a^2+24)/a",
            "-24/a",
            "-(24a^2 x^2+24a b x-48)/a^2",
        ],
        &["-(48a^2 x-48a b+96x)/a^2", "-(72a^3 x-48a b^2 x+96a x+96b)/a^2", "0", "-96x/a^2"],
        &["-96/a^2", "-48/a", "0", "0"],
    ]);
    s.member("sixth-order D", &d6, true, true);
    let h = hermite_monic(SEQUENCE_MAX);
    let v2 = v.clone();
    s.sequence(&cert, |n| v2.apply_poly(&MatP::scalar(2, h[n].clone())).expect("polynomial operator"));
    s.three_term();
    s.solver(2, 1, &[MatDiffOp::identity(2)]);
    s.solver(4, 1, &[MatDiffOp::identity(2)]);
    Ok(s.checks)
}
