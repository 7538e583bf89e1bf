#include "vsr/group_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace vsr {
namespace {

using R = Rat;

RatMatrix zero4() { return RatMatrix(4, 4); }

RatMatrix rot_z() {
  RatMatrix m = zero4();
  m(1, 2) = -1;
  m(2, 1) = 1;
  return m;
}
RatMatrix rot_x() {
  RatMatrix m = zero4();
  m(2, 3) = -1;
  m(3, 2) = 1;
  return m;
}
RatMatrix rot_y() {
  RatMatrix m = zero4();
  m(3, 1) = -1;
  m(1, 3) = 1;
  return m;
}
RatMatrix boost_x() {
  RatMatrix m = zero4();
  m(0, 1) = m(1, 0) = 1;
  return m;
}
RatMatrix boost_y() {
  RatMatrix m = zero4();
  m(0, 2) = m(2, 0) = 1;
  return m;
}
RatMatrix boost_z() {
  RatMatrix m = zero4();
  m(0, 3) = m(3, 0) = 1;
  return m;
}
// Null rotations fixing N = (1,0,0,1): t_1 = b_x + r_y, t_2 = b_y - r_x.
RatMatrix null_t1() { return boost_x() + rot_y(); }
RatMatrix null_t2() { return boost_y() - rot_x(); }

RatMatrix scalar4(const R& s) { return RatMatrix::identity(4).scaled(s); }

RatVec e4(int i) {
  RatVec v(4, R(0));
  v[i] = 1;
  return v;
}

Generator make_gen(std::string symbol, GeneratorKind kind, const RatMatrix& phi,
                   const RatVec& trans = RatVec(4, R(0)),
                   const RatVec& bottom = RatVec(4, R(0)),
                   const R& corner = R(0)) {
  Generator g;
  g.symbol = std::move(symbol);
  g.kind = kind;
  g.matrix = RatMatrix(5, 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g.matrix(i, j) = phi(i, j);
  for (std::size_t i = 0; i < 4; ++i) {
    g.matrix(i, 4) = trans[i];
    g.matrix(4, i) = bottom[i];
  }
  g.matrix(4, 4) = corner;
  return g;
}

Generator pure_translation(const std::string& symbol, int axis) {
  return make_gen(symbol, GeneratorKind::spacetime_translation, zero4(),
                  e4(axis));
}

const char* kAxisNames[4] = {"p_t", "p_x", "p_y", "p_z"};

void append_standard_translations(std::vector<Generator>& gens) {
  for (int i = 0; i < 4; ++i) gens.push_back(pure_translation(kAxisNames[i], i));
}

class ParamReader {
 public:
  ParamReader(GroupId id, DeformationParams& p)
      : name_(group_name(id)), p_(p) {}

  R require(const std::string& sym) const {
    auto it = p_.assignments.find(sym);
    if (it == p_.assignments.end())
      throw MissingParameter(name_ + ": missing parameter " + sym);
    return it->second;
  }

  // Derived parameter: if the caller supplied it too, it must agree exactly.
  R derive(const std::string& sym, const R& value,
           const std::string& relation) const {
    auto it = p_.assignments.find(sym);
    if (it != p_.assignments.end() && it->second != value)
      throw ConstraintViolated(name_ + ": " + relation + " violated by " + sym +
                               " = " + rat_str(it->second) +
                               " (expected " + rat_str(value) + ")");
    p_.assignments[sym] = value;  // record the derived value on the instance
    return value;
  }

 private:
  std::string name_;
  DeformationParams& p_;
};

std::vector<Generator> disim_generators(const R& a1, const R& a2) {
  std::vector<Generator> gens;
  gens.push_back(make_gen("t_1", GeneratorKind::null_translation, null_t1()));
  gens.push_back(make_gen("t_2", GeneratorKind::null_translation, null_t2()));
  gens.push_back(make_gen("r_z", GeneratorKind::rotation, rot_z() + scalar4(a1)));
  gens.push_back(make_gen("b_z", GeneratorKind::boost, boost_z() + scalar4(a2)));
  append_standard_translations(gens);
  return gens;
}

std::vector<Generator> xdisim2_generators(const R& a1, const R& a2, const R& a3,
                                          const R& al) {
  std::vector<Generator> gens;
  gens.push_back(make_gen("t_1", GeneratorKind::null_translation, null_t1()));
  gens.push_back(make_gen("t_2", GeneratorKind::null_translation, null_t2()));
  gens.push_back(make_gen("r_z", GeneratorKind::rotation, rot_z() + scalar4(a2)));
  RatMatrix bz = zero4();
  bz(0, 0) = 2 * (al - a1);
  bz(0, 3) = 1 + 2 * al - a3;
  bz(1, 1) = bz(2, 2) = a3 - a1;
  bz(3, 0) = 1 + a3 + 2 * (a1 - al);
  bz(3, 3) = 2 * (a3 - al);
  gens.push_back(make_gen("b_z", GeneratorKind::boost, bz));
  RatVec pt(4, R(0)), pz(4, R(0));
  pt[0] = 1 + al;
  pt[3] = a1 - al;
  pz[0] = al - a1;
  pz[3] = 1 + 2 * a1 - al;
  gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation, zero4(), pt));
  RatVec px(4, R(0)), py(4, R(0));
  px[1] = 1 + a1;
  py[2] = 1 + a1;
  gens.push_back(make_gen("p_x", GeneratorKind::spacetime_translation, zero4(), px));
  gens.push_back(make_gen("p_y", GeneratorKind::spacetime_translation, zero4(), py));
  gens.push_back(make_gen("p_z", GeneratorKind::spacetime_translation, zero4(), pz));
  return gens;
}

std::vector<Generator> dihom_generators(const R& a1, const R& a2) {
  const R s = a1 + a2;
  std::vector<Generator> gens;
  gens.push_back(make_gen("t_1", GeneratorKind::null_translation, null_t1()));
  gens.push_back(make_gen("t_2", GeneratorKind::null_translation, null_t2(),
                          RatVec(4, R(0)), {-s, R(0), R(0), -s}));
  gens.push_back(make_gen("b_z", GeneratorKind::boost, boost_z()));
  RatMatrix pt = zero4();
  pt(2, 0) = -s;
  gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation, pt, e4(0)));
  RatMatrix px = zero4();
  px(2, 1) = s;
  gens.push_back(make_gen("p_x", GeneratorKind::spacetime_translation, px, e4(1)));
  // p_y is printed with a nonzero (5,5) corner entry; transcribed verbatim.
  RatMatrix py = zero4();
  py(0, 3) = a1;
  py(3, 0) = a1;
  py(2, 2) = s;
  gens.push_back(make_gen("p_y", GeneratorKind::spacetime_translation, py, e4(2),
                          RatVec(4, R(0)), -s));
  RatMatrix pz = zero4();
  pz(2, 3) = s;
  gens.push_back(make_gen("p_z", GeneratorKind::spacetime_translation, pz, e4(3)));
  return gens;
}

std::vector<Generator> dte2a_rep1_generators(const R& a2, const R& beta) {
  std::vector<Generator> gens;
  gens.push_back(make_gen("t_1", GeneratorKind::null_translation, null_t1()));
  gens.push_back(make_gen("t_2", GeneratorKind::null_translation, null_t2()));
  gens.push_back(make_gen("r_z", GeneratorKind::rotation, rot_z()));
  RatMatrix pt = zero4();
  pt(0, 0) = pt(3, 3) = 2 * beta - a2 / 2;
  pt(0, 3) = pt(3, 0) = -a2 / 2;
  pt(1, 1) = pt(2, 2) = beta;
  gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation, pt, e4(0)));
  RatMatrix px = zero4();
  px(0, 1) = -beta;
  px(1, 0) = px(1, 3) = beta - a2;
  px(3, 1) = beta;
  gens.push_back(make_gen("p_x", GeneratorKind::spacetime_translation, px, e4(1)));
  RatMatrix py = zero4();
  py(0, 2) = -beta;
  py(2, 0) = py(2, 3) = beta - a2;
  py(3, 2) = beta;
  gens.push_back(make_gen("p_y", GeneratorKind::spacetime_translation, py, e4(2)));
  RatMatrix pz = zero4();
  pz(0, 0) = a2 / 2;
  pz(0, 3) = a2 / 2 - 2 * beta;
  pz(1, 1) = pz(2, 2) = beta;
  pz(3, 0) = 2 * beta - 3 * a2 / 2;
  pz(3, 3) = 4 * beta - 3 * a2 / 2;
  gens.push_back(make_gen("p_z", GeneratorKind::spacetime_translation, pz, e4(3)));
  return gens;
}

std::vector<Generator> dte2a_rep2_generators(const R& a2, const R& lam) {
  std::vector<Generator> gens;
  gens.push_back(make_gen("t_1", GeneratorKind::null_translation, null_t1()));
  gens.push_back(make_gen("t_2", GeneratorKind::null_translation, null_t2()));
  gens.push_back(make_gen("r_z", GeneratorKind::rotation, rot_z()));
  RatMatrix ptz = scalar4(lam);
  ptz(0, 3) = ptz(3, 0) = lam - a2;
  gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation, ptz, e4(0)));
  RatMatrix px = zero4();
  px(0, 1) = px(1, 0) = px(1, 3) = lam - a2;
  px(3, 1) = a2 - lam;
  gens.push_back(make_gen("p_x", GeneratorKind::spacetime_translation, px, e4(1)));
  RatMatrix py = zero4();
  py(0, 2) = py(2, 0) = py(2, 3) = lam - a2;
  py(3, 2) = a2 - lam;
  gens.push_back(make_gen("p_y", GeneratorKind::spacetime_translation, py, e4(2)));
  gens.push_back(make_gen("p_z", GeneratorKind::spacetime_translation, ptz, e4(3)));
  return gens;
}

std::vector<Generator> dte3b_generators(const R& a1, const R& a2) {
  std::vector<Generator> gens;
  gens.push_back(make_gen("t_1", GeneratorKind::null_translation, null_t1()));
  gens.push_back(make_gen("t_2", GeneratorKind::null_translation, null_t2()));
  RatMatrix rz = rot_z();
  rz(0, 0) = rz(0, 3) = a2;
  rz(3, 0) = rz(3, 3) = -a2;
  gens.push_back(make_gen("r_z", GeneratorKind::rotation, rz));
  RatMatrix ptz = zero4();
  ptz(0, 3) = a1;
  ptz(1, 1) = ptz(2, 2) = -a1;
  ptz(3, 0) = -a1;
  ptz(3, 3) = -2 * a1;
  gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation, ptz, e4(0)));
  RatMatrix px = zero4();
  px(0, 1) = px(1, 0) = px(1, 3) = -a1;
  px(3, 1) = a1;
  gens.push_back(make_gen("p_x", GeneratorKind::spacetime_translation, px, e4(1)));
  // p_y is not printed; x↔y analog of p_x.
  RatMatrix py = zero4();
  py(0, 2) = py(2, 0) = py(2, 3) = -a1;
  py(3, 2) = a1;
  gens.push_back(make_gen("p_y", GeneratorKind::spacetime_translation, py, e4(2)));
  gens.push_back(make_gen("p_z", GeneratorKind::spacetime_translation, ptz, e4(3)));
  return gens;
}

std::vector<Generator> diso3_rotations() {
  std::vector<Generator> gens;
  gens.push_back(make_gen("r_x", GeneratorKind::rotation, rot_x()));
  gens.push_back(make_gen("r_y", GeneratorKind::rotation, rot_y()));
  gens.push_back(make_gen("r_z", GeneratorKind::rotation, rot_z()));
  return gens;
}

// SO(2,1) acting on (t,y,z), fixing x.
std::vector<Generator> diso21_rotations() {
  std::vector<Generator> gens;
  gens.push_back(make_gen("r_x", GeneratorKind::rotation, rot_x()));
  gens.push_back(make_gen("b_y", GeneratorKind::boost, boost_y()));
  gens.push_back(make_gen("b_z", GeneratorKind::boost, boost_z()));
  return gens;
}

}  // namespace

std::string group_name(GroupId id) {
  switch (id) {
    case GroupId::deSitter: return "deSitter";
    case GroupId::Poincare: return "Poincare";
    case GroupId::DISIM: return "DISIM";
    case GroupId::DISIMb: return "DISIMb";
    case GroupId::XDISIM1: return "XDISIM1";
    case GroupId::XDISIM2: return "XDISIM2";
    case GroupId::ISIM: return "ISIM";
    case GroupId::DIHOM: return "DIHOM";
    case GroupId::WDIHOM: return "WDIHOM";
    case GroupId::IHOM: return "IHOM";
    case GroupId::DTE1: return "DTE1";
    case GroupId::DTE2a: return "DTE2a";
    case GroupId::DTE2b: return "DTE2b";
    case GroupId::DTE3b: return "DTE3b";
    case GroupId::IE2_TE2: return "IE2_TE2";
    case GroupId::DISO3_1: return "DISO3_1";
    case GroupId::DISO3_2: return "DISO3_2";
    case GroupId::ISO3: return "ISO3";
    case GroupId::DISO21_1: return "DISO21_1";
    case GroupId::DISO21_2: return "DISO21_2";
    case GroupId::ISO21: return "ISO21";
  }
  std::abort();
}

GroupId group_from_name(const std::string& name) {
  for (const auto& d : list_groups())
    if (d.name == name) return d.id;
  throw std::invalid_argument("unknown group: " + name);
}

std::string kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::rotation: return "rotation";
    case GeneratorKind::boost: return "boost";
    case GeneratorKind::null_translation: return "null-translation";
    case GeneratorKind::spacetime_translation: return "spacetime-translation";
  }
  std::abort();
}

std::vector<GroupDescriptor> list_groups() {
  return {
      {GroupId::deSitter, "deSitter", {"lambda"}, 1},
      {GroupId::Poincare, "Poincare", {}, 1},
      {GroupId::DISIM, "DISIM", {"A1", "A2"}, 1},
      {GroupId::DISIMb, "DISIMb", {"A2"}, 1},
      {GroupId::XDISIM1, "XDISIM1", {"A1", "A2", "A3"}, 1},
      {GroupId::XDISIM2, "XDISIM2", {"A1", "A2", "A3", "alpha"}, 2},
      {GroupId::ISIM, "ISIM", {}, 1},
      {GroupId::DIHOM, "DIHOM", {"A1", "A2"}, 1},
      {GroupId::WDIHOM, "WDIHOM", {"A2"}, 1},
      {GroupId::IHOM, "IHOM", {}, 1},
      {GroupId::DTE1, "DTE1", {"A1", "A2"}, 1},
      {GroupId::DTE2a, "DTE2a", {"A1", "A2", "beta", "lambda"}, 2},
      {GroupId::DTE2b, "DTE2b", {}, 0},
      {GroupId::DTE3b, "DTE3b", {"A1", "A2"}, 1},
      {GroupId::IE2_TE2, "IE2_TE2", {}, 1},
      {GroupId::DISO3_1, "DISO3_1", {"A1", "alpha", "beta"}, 1},
      {GroupId::DISO3_2, "DISO3_2", {"A1"}, 3},
      {GroupId::ISO3, "ISO3", {}, 1},
      {GroupId::DISO21_1, "DISO21_1", {"A1", "alpha", "beta"}, 1},
      {GroupId::DISO21_2, "DISO21_2", {"A1"}, 2},
      {GroupId::ISO21, "ISO21", {}, 1},
  };
}

GroupInstance instantiate(GroupId id, const DeformationParams& params,
                          int rep_variant) {
  GroupInstance inst;
  inst.id = id;
  inst.rep_variant = rep_variant;
  inst.params = params;
  ParamReader rd(id, inst.params);

  int rep_count = 1;
  for (const auto& d : list_groups())
    if (d.id == id) rep_count = d.rep_count;
  if (id == GroupId::DTE2b)
    throw NoRepresentation("DTE2b has no natural representation");
  if (rep_variant < 1 || rep_variant > rep_count)
    throw std::invalid_argument(group_name(id) + ": rep_variant out of range");

  auto& gens = inst.generators;
  switch (id) {
    case GroupId::Poincare: {
      gens.push_back(make_gen("r_x", GeneratorKind::rotation, rot_x()));
      gens.push_back(make_gen("r_y", GeneratorKind::rotation, rot_y()));
      gens.push_back(make_gen("r_z", GeneratorKind::rotation, rot_z()));
      gens.push_back(make_gen("b_x", GeneratorKind::boost, boost_x()));
      gens.push_back(make_gen("b_y", GeneratorKind::boost, boost_y()));
      gens.push_back(make_gen("b_z", GeneratorKind::boost, boost_z()));
      append_standard_translations(gens);
      break;
    }
    case GroupId::deSitter: {
      const R lam = rd.require("lambda");
      gens.push_back(make_gen("r_x", GeneratorKind::rotation, rot_x()));
      gens.push_back(make_gen("r_y", GeneratorKind::rotation, rot_y()));
      gens.push_back(make_gen("r_z", GeneratorKind::rotation, rot_z()));
      gens.push_back(make_gen("b_x", GeneratorKind::boost, boost_x()));
      gens.push_back(make_gen("b_y", GeneratorKind::boost, boost_y()));
      gens.push_back(make_gen("b_z", GeneratorKind::boost, boost_z()));
      // Translations pick up the curvature bottom row; the printed p_z
      // duplicates p_y (typo) and is corrected by analogy with p_x, p_y.
      RatVec bt(4, R(0)), bx(4, R(0)), by(4, R(0)), bz(4, R(0));
      bt[0] = -lam;
      bx[1] = lam;
      by[2] = lam;
      bz[3] = lam;
      gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation,
                              zero4(), e4(0), bt));
      gens.push_back(make_gen("p_x", GeneratorKind::spacetime_translation,
                              zero4(), e4(1), bx));
      gens.push_back(make_gen("p_y", GeneratorKind::spacetime_translation,
                              zero4(), e4(2), by));
      gens.push_back(make_gen("p_z", GeneratorKind::spacetime_translation,
                              zero4(), e4(3), bz));
      break;
    }
    case GroupId::DISIM:
      gens = disim_generators(rd.require("A1"), rd.require("A2"));
      break;
    case GroupId::DISIMb:
      gens = disim_generators(rd.derive("A1", R(0), "A1 = 0"),
                              rd.require("A2"));
      break;
    case GroupId::ISIM:
      gens = disim_generators(R(0), R(0));
      break;
    case GroupId::XDISIM1: {
      const R a1 = rd.require("A1"), a2 = rd.require("A2"),
              a3 = rd.require("A3");
      gens.push_back(make_gen("t_1", GeneratorKind::null_translation, null_t1()));
      gens.push_back(make_gen("t_2", GeneratorKind::null_translation, null_t2()));
      gens.push_back(make_gen("r_z", GeneratorKind::rotation,
                              rot_z() + scalar4(a2)));
      gens.push_back(make_gen("b_z", GeneratorKind::boost,
                              boost_z().scaled(1 + a1) + scalar4(a3 - a1)));
      RatVec pt(4, R(0)), pz(4, R(0)), px(4, R(0)), py(4, R(0));
      pt[0] = 1 + a1 / 2;
      pt[3] = a1 / 2;
      pz[0] = -a1 / 2;
      pz[3] = 1 + 3 * a1 / 2;
      px[1] = 1 + a1;
      py[2] = 1 + a1;
      gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation,
                              zero4(), pt));
      gens.push_back(make_gen("p_x", GeneratorKind::spacetime_translation,
                              zero4(), px));
      gens.push_back(make_gen("p_y", GeneratorKind::spacetime_translation,
                              zero4(), py));
      gens.push_back(make_gen("p_z", GeneratorKind::spacetime_translation,
                              zero4(), pz));
      break;
    }
    case GroupId::XDISIM2: {
      const R a1 = rd.require("A1"), a2 = rd.require("A2"),
              a3 = rd.require("A3");
      // rep 1 is the base printing, i.e. the free-parameter family at α=A1.
      const R al = rep_variant == 1 ? a1 : rd.require("alpha");
      gens = xdisim2_generators(a1, a2, a3, al);
      break;
    }
    case GroupId::DIHOM:
      gens = dihom_generators(rd.require("A1"), rd.require("A2"));
      break;
    case GroupId::WDIHOM: {
      // DISIM family without r_z, b_z deformed by A2.
      const R a2 = rd.require("A2");
      gens.push_back(make_gen("t_1", GeneratorKind::null_translation, null_t1()));
      gens.push_back(make_gen("t_2", GeneratorKind::null_translation, null_t2()));
      gens.push_back(make_gen("b_z", GeneratorKind::boost,
                              boost_z() + scalar4(a2)));
      append_standard_translations(gens);
      break;
    }
    case GroupId::IHOM:
      gens = dihom_generators(R(0), R(0));
      break;
    case GroupId::DTE1: {
      const R a1 = rd.require("A1"), a2 = rd.require("A2");
      gens.push_back(make_gen("t_1", GeneratorKind::null_translation, null_t1()));
      gens.push_back(make_gen("t_2", GeneratorKind::null_translation, null_t2()));
      RatMatrix rz = rot_z();
      rz(0, 0) = a1;
      rz(0, 3) = -a2;
      rz(1, 1) = rz(2, 2) = a1 + a2;
      rz(3, 0) = a2;
      rz(3, 3) = a1 + 2 * a2;
      gens.push_back(make_gen("r_z", GeneratorKind::rotation, rz));
      append_standard_translations(gens);
      break;
    }
    case GroupId::DTE2a: {
      const R a2 = rd.require("A2");
      if (rep_variant == 1) {
        const R beta = rd.require("beta");
        rd.derive("A1", a2 * beta - beta * beta,
                  "beta^2 - A2*beta + A1 = 0");
        gens = dte2a_rep1_generators(a2, beta);
      } else {
        const R lam = rd.require("lambda");
        rd.derive("A1", a2 * lam - lam * lam,
                  "lambda^2 - A2*lambda + A1 = 0");
        gens = dte2a_rep2_generators(a2, lam);
      }
      break;
    }
    case GroupId::DTE3b:
      gens = dte3b_generators(rd.require("A1"), rd.require("A2"));
      break;
    case GroupId::IE2_TE2:
      gens = dte3b_generators(R(0), R(0));
      break;
    case GroupId::DISO3_1: {
      const R al = rd.require("alpha"), be = rd.require("beta");
      rd.derive("A1", -al * be, "alpha*beta + A1 = 0");
      gens = diso3_rotations();
      gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation,
                              scalar4(al), e4(0)));
      for (int i = 1; i < 4; ++i) {
        RatMatrix phi = zero4();
        phi(0, i) = be;
        phi(i, 0) = al;
        gens.push_back(make_gen(kAxisNames[i],
                                GeneratorKind::spacetime_translation, phi,
                                e4(i)));
      }
      break;
    }
    case GroupId::DISO3_2: {
      const R a1 = rd.require("A1");
      gens = diso3_rotations();
      if (rep_variant == 1) {
        gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation,
                                scalar4(a1), e4(0)));
        for (int i = 1; i < 4; ++i)
          gens.push_back(pure_translation(kAxisNames[i], i));
      } else {
        // rep 2 as printed; rep 3 is its sign-flipped sibling.
        const R c = rep_variant == 2 ? -a1 : a1;
        for (int i = 0; i < 4; ++i) {
          RatMatrix phi = zero4();
          phi(i, 0) = c;
          gens.push_back(make_gen(kAxisNames[i],
                                  GeneratorKind::spacetime_translation, phi,
                                  e4(i)));
        }
      }
      break;
    }
    case GroupId::ISO3:
      gens = diso3_rotations();
      append_standard_translations(gens);
      break;
    case GroupId::DISO21_1: {
      const R al = rd.require("alpha"), be = rd.require("beta");
      rd.derive("A1", -al * be, "alpha*beta + A1 = 0");
      gens = diso21_rotations();
      RatMatrix pt = zero4();
      pt(0, 1) = al;
      pt(1, 0) = be;
      gens.push_back(make_gen("p_t", GeneratorKind::spacetime_translation, pt,
                              e4(0)));
      gens.push_back(make_gen("p_x", GeneratorKind::spacetime_translation,
                              scalar4(al), e4(1)));
      RatMatrix py = zero4();
      py(1, 2) = -be;
      py(2, 1) = al;
      gens.push_back(make_gen("p_y", GeneratorKind::spacetime_translation, py,
                              e4(2)));
      RatMatrix pz = zero4();
      pz(1, 3) = -be;
      pz(3, 1) = al;
      gens.push_back(make_gen("p_z", GeneratorKind::spacetime_translation, pz,
                              e4(3)));
      break;
    }
    case GroupId::DISO21_2: {
      const R a1 = rd.require("A1");
      gens = diso21_rotations();
      if (rep_variant == 1) {
        gens.push_back(pure_translation("p_t", 0));
        gens.push_back(make_gen("p_x", GeneratorKind::spacetime_translation,
                                scalar4(-a1), e4(1)));
        gens.push_back(pure_translation("p_y", 2));
        gens.push_back(pure_translation("p_z", 3));
      } else {
        // rep 2 reconstructed by analogy with DISO3_2's second representation.
        for (int i = 0; i < 4; ++i) {
          RatMatrix phi = zero4();
          phi(i, 1) = a1;
          gens.push_back(make_gen(kAxisNames[i],
                                  GeneratorKind::spacetime_translation, phi,
                                  e4(i)));
        }
      }
      break;
    }
    case GroupId::ISO21:
      gens = diso21_rotations();
      append_standard_translations(gens);
      break;
    case GroupId::DTE2b:
      break;  // unreachable
  }
  return inst;
}

RatMatrix linear_part(const Generator& g) {
  RatMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = g.matrix(i, j);
  return m;
}

RatVec translation_column(const Generator& g) {
  RatVec v(4);
  for (std::size_t i = 0; i < 4; ++i) v[i] = g.matrix(i, 4);
  return v;
}

RatVec bottom_row(const Generator& g) {
  RatVec v(4);
  for (std::size_t j = 0; j < 4; ++j) v[j] = g.matrix(4, j);
  return v;
}

std::vector<double> mat_exp(const std::vector<double>& m, std::size_t n) {
  auto matmul = [n](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        double f = a[i * n + k];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] += f * b[k * n + j];
      }
    return c;
  };
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(m[i * n + j]);
    norm = std::max(norm, row);
  }
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  std::vector<double> a(m);
  for (auto& x : a) x *= scale;
  // Taylor series of exp(a) with ||a|| <= 1/2 converges to machine precision
  // in ~20 terms.
  std::vector<double> result(n * n, 0.0), term(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = term[i * n + i] = 1.0;
  for (int k = 1; k <= 24; ++k) {
    term = matmul(term, a);
    for (auto& x : term) x /= k;
    for (std::size_t i = 0; i < n * n; ++i) result[i] += term[i];
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result);
  return result;
}

std::vector<double> one_parameter_element(const Generator& g, double theta) {
  std::vector<double> m(25);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      m[i * 5 + j] = theta * rat_double(g.matrix(i, j));
  return mat_exp(m, 5);
}

nlohmann::ordered_json to_json(const GroupInstance& g) {
  nlohmann::ordered_json j;
  j["group"] = group_name(g.id);
  j["rep_variant"] = g.rep_variant;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : g.params.assignments) params[k] = rat_str(v);
  j["params"] = params;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& gen : g.generators) {
    nlohmann::ordered_json jg;
    jg["name"] = gen.symbol;
    jg["kind"] = kind_name(gen.kind);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < 5; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t jx = 0; jx < 5; ++jx)
        row.push_back(rat_str(gen.matrix(i, jx)));
      rows.push_back(row);
    }
    jg["matrix"] = rows;
    gens.push_back(jg);
  }
  j["generators"] = gens;
  return j;
}

GroupInstance instance_from_json(const nlohmann::ordered_json& j) {
  GroupInstance g;
  g.id = group_from_name(j.at("group").get<std::string>());
  g.rep_variant = j.at("rep_variant").get<int>();
  for (const auto& [k, v] : j.at("params").items())
    g.params.assignments[k] = rat_parse(v.get<std::string>());
  for (const auto& jg : j.at("generators")) {
    Generator gen;
    gen.symbol = jg.at("name").get<std::string>();
    const std::string kind = jg.at("kind").get<std::string>();
    if (kind == "rotation") gen.kind = GeneratorKind::rotation;
    else if (kind == "boost") gen.kind = GeneratorKind::boost;
    else if (kind == "null-translation") gen.kind = GeneratorKind::null_translation;
    else gen.kind = GeneratorKind::spacetime_translation;
    gen.matrix = RatMatrix(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t jx = 0; jx < 5; ++jx)
        gen.matrix(i, jx) =
            rat_parse(jg.at("matrix")[i][jx].get<std::string>());
    g.generators.push_back(std::move(gen));
  }
  return g;
}

}  // namespace vsr
