#include "siegel/diffop.hpp"

#include <stdexcept>

namespace siegel {

FourierSeries coordinate_derivative(const FourierSeries& f, Axis axis) {
  FourierSeries out = f;
  auto& c = out.dense();
  const IndexSpace& space = out.space();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const EtaIndex e = space.at(i);
    const std::int64_t factor = axis == Axis::x ? e.x : axis == Axis::y ? e.y : e.z;
    c[i] *= factor;
  }
  return out;
}

FourierSeries bracket(const FourierSeries& f1, const FourierSeries& f2, const FourierSeries& f3,
                      const FourierSeries& f4) {
  const std::array<const FourierSeries*, 4> f{&f1, &f2, &f3, &f4};
  const int prec = f1.prec();
  int weight = 3;
  for (const auto* s : f) {
    if (s->prec() != prec) throw std::invalid_argument("bracket: inputs must share one precision");
    weight += s->weight();
  }

  // Laplace expansion along the first two rows:
  // det = sum_{a<b} (-1)^(a+b+1) M01(a,b) M23(c,d), {c,d} the complementary columns
  // (0-based), with rows (k f, x f), (y f, z f) paired into 2x2 minors.
  std::vector<FourierSeries> top, dx, dy, dz;
  for (const auto* s : f) {
    top.push_back(scale(s->weight(), *s));
    dx.push_back(coordinate_derivative(*s, Axis::x));
    dy.push_back(coordinate_derivative(*s, Axis::y));
    dz.push_back(coordinate_derivative(*s, Axis::z));
  }
  const auto minor = [](const FourierSeries& a0, const FourierSeries& b0, const FourierSeries& a1,
                        const FourierSeries& b1) {
    // | a0 b0 |
    // | a1 b1 |
    return linear_combine({{1, multiply(a0, b1)}, {-1, multiply(b0, a1)}});
  };

  std::vector<Term> terms;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      std::array<std::size_t, 2> rest{};
      std::size_t r = 0;
      for (std::size_t c = 0; c < 4; ++c)
        if (c != a && c != b) rest[r++] = c;
      const FourierSeries upper = minor(top[a], top[b], dx[a], dx[b]);
      const FourierSeries lower = minor(dy[rest[0]], dy[rest[1]], dz[rest[0]], dz[rest[1]]);
      const int sign = (a + b) % 2 == 0 ? -1 : 1;
      terms.push_back({sign, multiply(upper, lower).with_weight(weight)});
    }
  }
  return linear_combine(terms);
}

}  // namespace siegel
