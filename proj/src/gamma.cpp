#include "pmv/gamma.hpp"

namespace pmv {

GroupElement clamp_to_unit(const UnitalLGroup& g, const GroupElement& x) {
  const LGroup& G = g.group();
  return G.meet(G.join(x, G.identity()), g.unit());
}

namespace {

class GammaBackend final : public AlgebraBackend {
 public:
  explicit GammaBackend(UnitalLGroup g) : g_(std::move(g)) {}

  BackendKind kind() const override { return BackendKind::gamma_interval; }
  std::string describe() const override {
    return "Gamma(" + G().name() + "," + G().render(g_.unit()) + ")";
  }
  Element zero() const override { return G().identity(); }
  Element one() const override { return g_.unit(); }
  Element oplus(const Element& x, const Element& y) const override {
    return G().meet(G().add(x.point(), y.point()), g_.unit());
  }
  Element minus(const Element& x) const override { return G().add(g_.unit(), G().neg(x.point())); }
  Element tilde(const Element& x) const override { return G().add(G().neg(x.point()), g_.unit()); }
  bool equal(const Element& x, const Element& y) const override { return G().equal(x.point(), y.point()); }
  bool contains(const Element& x) const override {
    const auto& p = x.point();
    return G().contains(p) && G().leq(G().identity(), p) && G().leq(p, g_.unit());
  }
  std::string render(const Element& x) const override { return G().render(x.point()); }
  Element sample(Rng& rng, const SamplerConfig& cfg) const override {
    return clamp_to_unit(g_, G().sample_below(rng, cfg, g_.unit()));
  }
  double tolerance() const override { return G().tolerance(); }
  const UnitalLGroup* unital_group() const override { return &g_; }

 private:
  const LGroup& G() const { return g_.group(); }

  UnitalLGroup g_;
};

}  // namespace

PseudoMV gamma(const UnitalLGroup& g, SamplerConfig sampler) {
  return PseudoMV(std::make_shared<GammaBackend>(g), sampler);
}

}  // namespace pmv
