use crate::homcore::{Bimodule, HomAlgebra};
use crate::lmcat::{LmObject, LmRepresentation};
use crate::qlinalg::{Matrix, Vector};
use crate::report::{run, CheckReport, Residual};
use crate::scalar::Scalar;
use crate::tensor::Multilinear;

use super::cochain::{Cochain1, Cochain2, Cochain3};

fn basis<S: Scalar>(n: usize, i: usize) -> Vector<S> {
    Vector::basis(n, i)
}

/// Shorthand for the structure maps an evaluator needs.
struct Ctx<'a, S> {
    o: &'a LmObject<S>,
    r: &'a LmRepresentation<S>,
}

impl<'a, S: Scalar> Ctx<'a, S> {
    fn a(&self) -> &HomAlgebra<S> {
        &self.o.algebra
    }
    fn b(&self) -> &Bimodule<S> {
        &self.o.module
    }
    fn al(&self, x: &Vector<S>) -> Vector<S> {
        self.o.algebra.twist(x)
    }
    fn alm(&self, m: &Vector<S>) -> Vector<S> {
        self.o.module.twist(m)
    }
    fn xy(&self, x: &Vector<S>, y: &Vector<S>) -> Vector<S> {
        self.a().mul(x, y)
    }
    fn xm(&self, x: &Vector<S>, m: &Vector<S>) -> Vector<S> {
        self.b().act_left(x, m)
    }
    fn mx(&self, m: &Vector<S>, x: &Vector<S>) -> Vector<S> {
        self.b().act_right(m, x)
    }
    fn xv(&self, x: &Vector<S>, v: &Vector<S>) -> Vector<S> {
        self.r.v.act_left(x, v)
    }
    fn vx(&self, v: &Vector<S>, x: &Vector<S>) -> Vector<S> {
        self.r.v.act_right(v, x)
    }
    fn xw(&self, x: &Vector<S>, w: &Vector<S>) -> Vector<S> {
        self.r.w.act_left(x, w)
    }
    fn wx(&self, w: &Vector<S>, x: &Vector<S>) -> Vector<S> {
        self.r.w.act_right(w, x)
    }
    fn phi(&self, v: &Vector<S>) -> Vector<S> {
        self.r.phi.apply(v)
    }
}

/// `D1(N0, N1)`:
/// `(x,y) -> N0(x)y + xN0(y) - N0(xy)`,
/// `(x,m) -> N0(x) |> m + x.N1(m) - N1(x.m)`,
/// `(m,x) -> N1(m).x + m <| N0(x) - N1(m.x)`,
/// `m -> phi N1(m) - N0 f(m)`.
pub fn apply_d1<S: Scalar>(
    o: &LmObject<S>,
    r: &LmRepresentation<S>,
    c: &Cochain1<S>,
) -> Cochain2<S> {
    let k = Ctx { o, r };
    let (n, m, v, w) = (o.n(), o.m(), r.vdim(), r.wdim());
    let n0 = |x: &Vector<S>| c.n0.apply(x);
    let n1 = |u: &Vector<S>| c.n1.apply(u);
    let omega = Multilinear::from_fn(&[n, n], w, |t| {
        let (x, y) = (basis(n, t[0]), basis(n, t[1]));
        k.wx(&n0(&x), &y) + k.xw(&x, &n0(&y)) - n0(&k.xy(&x, &y))
    });
    let mu = Multilinear::from_fn(&[n, m], v, |t| {
        let (x, u) = (basis(n, t[0]), basis(m, t[1]));
        r.tri_r(&n0(&x), &u) + k.xv(&x, &n1(&u)) - n1(&k.xm(&x, &u))
    });
    let nu = Multilinear::from_fn(&[m, n], v, |t| {
        let (u, x) = (basis(m, t[0]), basis(n, t[1]));
        k.vx(&n1(&u), &x) + r.tri_l(&u, &n0(&x)) - n1(&k.mx(&u, &x))
    });
    let theta = r.phi.compose(&c.n1).sub(&c.n0.compose(&o.anchor));
    Cochain2 {
        omega,
        mu,
        nu,
        theta,
    }
}

/// `D2(omega, mu, nu, theta)`, one summand per argument signature.
pub fn apply_d2<S: Scalar>(
    o: &LmObject<S>,
    r: &LmRepresentation<S>,
    c: &Cochain2<S>,
) -> Cochain3<S> {
    let k = Ctx { o, r };
    let (n, m, v, w) = (o.n(), o.m(), r.vdim(), r.wdim());
    let om = |x: &Vector<S>, y: &Vector<S>| c.omega.apply(&[x, y]);
    let mu = |x: &Vector<S>, u: &Vector<S>| c.mu.apply(&[x, u]);
    let nu = |u: &Vector<S>, x: &Vector<S>| c.nu.apply(&[u, x]);
    let th = |u: &Vector<S>| c.theta.apply(u);
    let g = |i: usize| basis::<S>(n, i);
    let e = |i: usize| basis::<S>(m, i);

    let xyz = Multilinear::from_fn(&[n, n, n], w, |t| {
        let (x, y, z) = (g(t[0]), g(t[1]), g(t[2]));
        k.xw(&k.al(&x), &om(&y, &z)) + om(&k.al(&x), &k.xy(&y, &z))
            - om(&k.xy(&x, &y), &k.al(&z))
            - k.wx(&om(&x, &y), &k.al(&z))
            - k.xw(&k.al(&y), &om(&x, &z))
            - om(&k.al(&y), &k.xy(&x, &z))
    });
    let xym = Multilinear::from_fn(&[n, n, m], v, |t| {
        let (x, y, u) = (g(t[0]), g(t[1]), e(t[2]));
        k.xv(&k.al(&x), &mu(&y, &u)) + mu(&k.al(&x), &k.xm(&y, &u))
            - r.tri_r(&om(&x, &y), &k.alm(&u))
            - mu(&k.xy(&x, &y), &k.alm(&u))
            - k.xv(&k.al(&y), &mu(&x, &u))
            - mu(&k.al(&y), &k.xm(&x, &u))
    });
    let xmy = Multilinear::from_fn(&[n, m, n], v, |t| {
        let (x, u, y) = (g(t[0]), e(t[1]), g(t[2]));
        k.xv(&k.al(&x), &nu(&u, &y)) + mu(&k.al(&x), &k.mx(&u, &y))
            - nu(&k.xm(&x, &u), &k.al(&y))
            - k.vx(&mu(&x, &u), &k.al(&y))
            - r.tri_l(&k.alm(&u), &om(&x, &y))
            - nu(&k.alm(&u), &k.xy(&x, &y))
    });
    let mxy = Multilinear::from_fn(&[m, n, n], v, |t| {
        let (u, x, y) = (e(t[0]), g(t[1]), g(t[2]));
        r.tri_l(&k.alm(&u), &om(&x, &y)) + nu(&k.alm(&u), &k.xy(&x, &y))
            - k.vx(&nu(&u, &x), &k.al(&y))
            - nu(&k.mx(&u, &x), &k.al(&y))
            - k.xv(&k.al(&x), &nu(&u, &y))
            - mu(&k.al(&x), &k.mx(&u, &y))
    });
    let xm = Multilinear::from_fn(&[n, m], w, |t| {
        let (x, u) = (g(t[0]), e(t[1]));
        th(&k.xm(&x, &u)) + k.phi(&mu(&x, &u)) - om(&x, &o.f(&u)) - k.xw(&x, &th(&u))
    });
    let mx = Multilinear::from_fn(&[m, n], w, |t| {
        let (u, x) = (e(t[0]), g(t[1]));
        th(&k.mx(&u, &x)) + k.phi(&nu(&u, &x)) - om(&o.f(&u), &x) - k.wx(&th(&u), &x)
    });
    Cochain3 {
        xyz,
        mxy,
        xmy,
        xym,
        mx,
        xm,
    }
}

/// The 1-cocycle equations, each written as left side minus right side.
pub fn check_1_cocycle<S: Scalar>(
    o: &LmObject<S>,
    r: &LmRepresentation<S>,
    c: &Cochain1<S>,
) -> CheckReport<S> {
    let (n, m) = (o.n(), o.m());
    let k = Ctx { o, r };
    let k = &k;
    let rep = run(&[
        Residual::new("anchor", &[m], move |t| {
            let u = basis(m, t[0]);
            k.phi(&c.n1.apply(&u)) - c.n0.apply(&o.f(&u))
        }),
        Residual::new("derivation(x,y)", &[n, n], move |t| {
            let (x, y) = (basis(n, t[0]), basis(n, t[1]));
            let lhs = c.n0.apply(&k.xy(&x, &y));
            lhs - k.wx(&c.n0.apply(&x), &y) - k.xw(&x, &c.n0.apply(&y))
        }),
        Residual::new("derivation(x,m)", &[n, m], move |t| {
            let (x, u) = (basis(n, t[0]), basis(m, t[1]));
            let lhs = c.n1.apply(&k.xm(&x, &u));
            lhs - r.tri_r(&c.n0.apply(&x), &u) - k.xv(&x, &c.n1.apply(&u))
        }),
        Residual::new("derivation(m,x)", &[m, n], move |t| {
            let (u, x) = (basis(m, t[0]), basis(n, t[1]));
            let lhs = c.n1.apply(&k.mx(&u, &x));
            lhs - k.vx(&c.n1.apply(&u), &x) - r.tri_l(&u, &c.n0.apply(&x))
        }),
    ]);
    rep
}

/// The six 2-cocycle conditions, transcribed as balance equations:
/// positive terms on one side, negative terms on the other.
pub fn check_2_cocycle<S: Scalar>(
    o: &LmObject<S>,
    r: &LmRepresentation<S>,
    c: &Cochain2<S>,
) -> CheckReport<S> {
    let (n, m) = (o.n(), o.m());
    let k = Ctx { o, r };
    let k = &k;
    let om = move |x: &Vector<S>, y: &Vector<S>| c.omega.apply(&[x, y]);
    let mu = move |x: &Vector<S>, u: &Vector<S>| c.mu.apply(&[x, u]);
    let nu = move |u: &Vector<S>, x: &Vector<S>| c.nu.apply(&[u, x]);
    let th = move |u: &Vector<S>| c.theta.apply(u);
    let g = move |i: usize| basis::<S>(n, i);
    let e = move |i: usize| basis::<S>(m, i);
    let rep = run(&[
        Residual::new("cocycle(x,y,z)", &[n, n, n], move |t| {
            let (x, y, z) = (g(t[0]), g(t[1]), g(t[2]));
            let (ax, ay, az) = (k.al(&x), k.al(&y), k.al(&z));
            let lhs = k.xw(&ax, &om(&y, &z)) + om(&ax, &k.xy(&y, &z));
            let rhs = om(&k.xy(&x, &y), &az)
                + k.wx(&om(&x, &y), &az)
                + k.xw(&ay, &om(&x, &z))
                + om(&ay, &k.xy(&x, &z));
            lhs - rhs
        }),
        Residual::new("cocycle(x,y,m)", &[n, n, m], move |t| {
            let (x, y, u) = (g(t[0]), g(t[1]), e(t[2]));
            let (ax, ay, au) = (k.al(&x), k.al(&y), k.alm(&u));
            let lhs = k.xv(&ax, &mu(&y, &u)) + mu(&ax, &k.xm(&y, &u));
            let rhs = r.tri_r(&om(&x, &y), &au)
                + mu(&k.xy(&x, &y), &au)
                + k.xv(&ay, &mu(&x, &u))
                + mu(&ay, &k.xm(&x, &u));
            lhs - rhs
        }),
        Residual::new("cocycle(m,x,y)", &[m, n, n], move |t| {
            let (u, x, y) = (e(t[0]), g(t[1]), g(t[2]));
            let (ax, ay, au) = (k.al(&x), k.al(&y), k.alm(&u));
            let lhs = r.tri_l(&au, &om(&x, &y)) + nu(&au, &k.xy(&x, &y));
            let rhs = k.vx(&nu(&u, &x), &ay)
                + nu(&k.mx(&u, &x), &ay)
                + k.xv(&ax, &nu(&u, &y))
                + mu(&ax, &k.mx(&u, &y));
            lhs - rhs
        }),
        Residual::new("cocycle(x,m,y)", &[n, m, n], move |t| {
            let (x, u, y) = (g(t[0]), e(t[1]), g(t[2]));
            let (ax, ay, au) = (k.al(&x), k.al(&y), k.alm(&u));
            let lhs = k.xv(&ax, &nu(&u, &y)) + mu(&ax, &k.mx(&u, &y));
            let rhs = nu(&k.xm(&x, &u), &ay)
                + k.vx(&mu(&x, &u), &ay)
                + r.tri_l(&au, &om(&x, &y))
                + nu(&au, &k.xy(&x, &y));
            lhs - rhs
        }),
        Residual::new("cocycle(x,m)", &[n, m], move |t| {
            let (x, u) = (g(t[0]), e(t[1]));
            let lhs = th(&k.xm(&x, &u)) + k.phi(&mu(&x, &u));
            lhs - k.xw(&x, &th(&u)) - om(&x, &o.f(&u))
        }),
        Residual::new("cocycle(m,x)", &[m, n], move |t| {
            let (u, x) = (e(t[0]), g(t[1]));
            let lhs = th(&k.mx(&u, &x)) + k.phi(&nu(&u, &x));
            lhs - om(&o.f(&u), &x) - k.wx(&th(&u), &x)
        }),
    ]);
    rep
}

/// The Hom-Leibniz coboundary of `omega: g^k -> M` with coefficients in a
/// bimodule:
///
/// `d omega(u_1..u_{k+1}) = sum_{i<=k} (-1)^{i+1} alpha^{k-1}(u_i).omega(..^u_i..)
///   + (-1)^{k+1} omega(u_1..u_k).alpha^{k-1}(u_{k+1})
///   + sum_{i<j} (-1)^i omega(alpha(u_1).. ^u_i .. u_i u_j .. alpha(u_{k+1}))`
///
/// where in the last sum `u_i u_j` sits in slot `j` and every other argument
/// is twisted once.
pub fn cs_coboundary<S: Scalar>(
    a: &HomAlgebra<S>,
    b: &Bimodule<S>,
    omega: &Multilinear<S>,
) -> Multilinear<S> {
    let k = omega.arity();
    assert!(k >= 1, "degree must be positive");
    let n = a.dim();
    assert!(
        omega.arg_dims().iter().all(|&d| d == n) && omega.out_dim() == b.dim(),
        "cochain shape"
    );
    let mut twist_k = Matrix::identity(n);
    for _ in 1..k {
        twist_k = twist_k.compose(a.alpha());
    }
    let sign = |e: usize| if e % 2 == 0 { S::one() } else { -S::one() };
    Multilinear::from_fn(&vec![n; k + 1], b.dim(), |t| {
        let u: Vec<Vector<S>> = t.iter().map(|&i| basis(n, i)).collect();
        let mut out = Vector::zeros(b.dim());
        let eval = |args: Vec<Vector<S>>| {
            let refs: Vec<&Vector<S>> = args.iter().collect();
            omega.apply(&refs)
        };
        for i in 0..k {
            let rest: Vec<Vector<S>> = u
                .iter()
                .enumerate()
                .filter(|(p, _)| *p != i)
                .map(|(_, x)| x.clone())
                .collect();
            let term = b.act_left(&twist_k.apply(&u[i]), &eval(rest));
            // position i+1 in one-based numbering
            out.axpy(&sign(i + 2), &term);
        }
        let head = eval(u[..k].to_vec());
        out.axpy(&sign(k + 1), &b.act_right(&head, &twist_k.apply(&u[k])));
        for i in 0..=k {
            for j in i + 1..=k {
                let args: Vec<Vector<S>> = (0..=k)
                    .filter(|&p| p != i)
                    .map(|p| {
                        if p == j {
                            a.mul(&u[i], &u[j])
                        } else {
                            a.twist(&u[p])
                        }
                    })
                    .collect();
                out.axpy(&sign(i + 1), &eval(args));
            }
        }
        out
    })
}
