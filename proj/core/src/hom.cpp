#include "yblie/hom.hpp"

#include "yblie/errors.hpp"

namespace yblie {

GradedObject hom_object(const GradedObject& x, const GradedObject& z) {
  std::vector<std::uint8_t> degrees;
  degrees.reserve(z.dim() * x.dim());
  for (std::size_t zi = 0; zi < z.dim(); ++zi)
    for (std::size_t xi = 0; xi < x.dim(); ++xi)
      degrees.push_back(static_cast<std::uint8_t>((z.degree(zi) + x.degree(xi)) % 2));
  return GradedObject(std::move(degrees));
}

ExactMorphism hom_counit(const Field& f, const GradedObject& x,
                         const GradedObject& z) {
  GradedObject h = hom_object(x, z);
  GradedObject src = tensor(h, x);
  Matrix m(f, z.dim(), src.dim());
  for (std::size_t zi = 0; zi < z.dim(); ++zi)
    for (std::size_t xi = 0; xi < x.dim(); ++xi) {
      std::size_t hidx = zi * x.dim() + xi;
      m.set(zi, hidx * x.dim() + xi, Scalar::one(f));
    }
  return ExactMorphism(src, z, std::move(m));
}

ExactMorphism hom_unit(const Field& f, const GradedObject& x,
                       const GradedObject& y) {
  GradedObject yx = tensor(y, x);
  GradedObject h = hom_object(x, yx);
  Matrix m(f, h.dim(), y.dim());
  for (std::size_t yi = 0; yi < y.dim(); ++yi)
    for (std::size_t xi = 0; xi < x.dim(); ++xi) {
      std::size_t zi = yi * x.dim() + xi;  // index of (y,x) in Y tensor X
      m.set(zi * x.dim() + xi, yi, Scalar::one(f));
    }
  return ExactMorphism(y, h, std::move(m));
}

ExactMorphism hom_counit_right(const Field& f, const GradedObject& x,
                               const GradedObject& z) {
  GradedObject h = hom_object(x, z);
  GradedObject src = tensor(x, h);
  Matrix m(f, z.dim(), src.dim());
  for (std::size_t zi = 0; zi < z.dim(); ++zi)
    for (std::size_t xi = 0; xi < x.dim(); ++xi) {
      std::size_t hidx = zi * x.dim() + xi;
      m.set(zi, xi * h.dim() + hidx, Scalar::one(f));
    }
  return ExactMorphism(src, z, std::move(m));
}

ExactMorphism hom_unit_right(const Field& f, const GradedObject& x,
                             const GradedObject& y) {
  GradedObject xy = tensor(x, y);
  GradedObject h = hom_object(x, xy);
  Matrix m(f, h.dim(), y.dim());
  for (std::size_t yi = 0; yi < y.dim(); ++yi)
    for (std::size_t xi = 0; xi < x.dim(); ++xi) {
      std::size_t zi = xi * y.dim() + yi;  // index of (x,y) in X tensor Y
      m.set(zi * x.dim() + xi, yi, Scalar::one(f));
    }
  return ExactMorphism(y, h, std::move(m));
}

ExactMorphism curry(const ExactMorphism& f, const GradedObject& y,
                    const GradedObject& x) {
  if (f.source() != tensor(y, x))
    throw ShapeError("curry: source is not Y tensor X");
  const GradedObject& z = f.target();
  GradedObject h = hom_object(x, z);
  Matrix m(f.mat().field(), h.dim(), y.dim());
  for (std::size_t zi = 0; zi < z.dim(); ++zi)
    for (std::size_t yi = 0; yi < y.dim(); ++yi)
      for (std::size_t xi = 0; xi < x.dim(); ++xi) {
        const Scalar& v = f.mat().at(zi, yi * x.dim() + xi);
        if (!v.is_zero()) m.set(zi * x.dim() + xi, yi, v);
      }
  return ExactMorphism(y, h, std::move(m));
}

ExactMorphism uncurry(const ExactMorphism& g, const GradedObject& x,
                      const GradedObject& z) {
  if (g.target() != hom_object(x, z))
    throw ShapeError("uncurry: target is not H(X,Z)");
  const GradedObject& y = g.source();
  Matrix m(g.mat().field(), z.dim(), y.dim() * x.dim());
  for (std::size_t zi = 0; zi < z.dim(); ++zi)
    for (std::size_t yi = 0; yi < y.dim(); ++yi)
      for (std::size_t xi = 0; xi < x.dim(); ++xi) {
        const Scalar& v = g.mat().at(zi * x.dim() + xi, yi);
        if (!v.is_zero()) m.set(zi, yi * x.dim() + xi, v);
      }
  return ExactMorphism(tensor(y, x), z, std::move(m));
}

ExactMorphism curry_right(const ExactMorphism& f, const GradedObject& x,
                          const GradedObject& y) {
  if (f.source() != tensor(x, y))
    throw ShapeError("curry_right: source is not X tensor Y");
  const GradedObject& z = f.target();
  GradedObject h = hom_object(x, z);
  Matrix m(f.mat().field(), h.dim(), y.dim());
  for (std::size_t zi = 0; zi < z.dim(); ++zi)
    for (std::size_t yi = 0; yi < y.dim(); ++yi)
      for (std::size_t xi = 0; xi < x.dim(); ++xi) {
        const Scalar& v = f.mat().at(zi, xi * y.dim() + yi);
        if (!v.is_zero()) m.set(zi * x.dim() + xi, yi, v);
      }
  return ExactMorphism(y, h, std::move(m));
}

ExactMorphism hom_map_post(const ExactMorphism& h, const GradedObject& x) {
  GradedObject src = hom_object(x, h.source());
  GradedObject tgt = hom_object(x, h.target());
  return ExactMorphism(src, tgt,
                       kron(h.mat(), Matrix::identity(h.mat().field(), x.dim())));
}

ExactMorphism hom_map_pre(const ExactMorphism& g, const GradedObject& z) {
  const GradedObject& x = g.source();
  const GradedObject& xp = g.target();
  GradedObject src = hom_object(xp, z);
  GradedObject tgt = hom_object(x, z);
  Matrix m(g.mat().field(), tgt.dim(), src.dim());
  for (std::size_t zi = 0; zi < z.dim(); ++zi)
    for (std::size_t xi = 0; xi < x.dim(); ++xi)
      for (std::size_t xpi = 0; xpi < xp.dim(); ++xpi) {
        const Scalar& v = g.mat().at(xpi, xi);
        if (!v.is_zero())
          m.set(zi * x.dim() + xi, zi * xp.dim() + xpi, v);
      }
  return ExactMorphism(src, tgt, std::move(m));
}

ExactMorphism hom_map_post_right(const ExactMorphism& h, const GradedObject& x) {
  return hom_map_post(h, x);  // identical layout for H and H'
}

ExactMorphism pi_internal(const Field& f, const GradedObject& x,
                          const GradedObject& y, const GradedObject& z) {
  GradedObject src = hom_object(tensor(y, x), z);
  GradedObject tgt = hom_object(y, hom_object(x, z));
  Matrix m(f, tgt.dim(), src.dim());
  for (std::size_t zi = 0; zi < z.dim(); ++zi)
    for (std::size_t yi = 0; yi < y.dim(); ++yi)
      for (std::size_t xi = 0; xi < x.dim(); ++xi) {
        std::size_t src_idx = zi * (y.dim() * x.dim()) + yi * x.dim() + xi;
        std::size_t tgt_idx = (zi * x.dim() + xi) * y.dim() + yi;
        m.set(tgt_idx, src_idx, Scalar::one(f));
      }
  return ExactMorphism(src, tgt, std::move(m));
}

ExactMorphism pi_internal_inv(const Field& f, const GradedObject& x,
                              const GradedObject& y, const GradedObject& z) {
  ExactMorphism p = pi_internal(f, x, y, z);
  return ExactMorphism(p.target(), p.source(), p.mat().transpose());
}

ExactMorphism pi_from_unit_counit(const Field& f, const GradedObject& x,
                                  const GradedObject& y, const GradedObject& z) {
  GradedObject w = hom_object(tensor(y, x), z);  // H(Y (x) X, Z)
  ExactMorphism eta_outer = hom_unit(f, y, w);   // W -> H(Y, W (x) Y)
  ExactMorphism eta_inner = hom_unit(f, x, tensor(w, y));
  ExactMorphism step2 = hom_map_post(eta_inner, y);
  ExactMorphism eps = hom_counit(f, tensor(y, x), z);  // W (x) Y (x) X -> Z
  ExactMorphism step3 = hom_map_post(hom_map_post(eps, x), y);
  return compose(step3, compose(step2, eta_outer));
}

ExactMorphism pi_inv_from_unit_counit(const Field& f, const GradedObject& x,
                                      const GradedObject& y, const GradedObject& z) {
  GradedObject hxz = hom_object(x, z);
  GradedObject v = hom_object(y, hxz);  // H(Y, H(X,Z))
  GradedObject yx = tensor(y, x);
  ExactMorphism eta = hom_unit(f, yx, v);  // V -> H(Y(x)X, V(x)Y(x)X)
  ExactMorphism eps_y = hom_counit(f, y, hxz);  // V (x) Y -> H(X,Z)
  ExactMorphism step2 = hom_map_post(tensor(eps_y, ExactMorphism::identity(f, x)), yx);
  ExactMorphism eps_x = hom_counit(f, x, z);  // H(X,Z) (x) X -> Z
  ExactMorphism step3 = hom_map_post(eps_x, yx);
  return compose(step3, compose(step2, eta));
}

}  // namespace yblie
