#include "hlc/samples.hpp"

namespace hlc::samples {

Type p() { return Type::prim("p", 2); }
Type q() { return Type::prim("q", 0); }
Type r() { return Type::prim("r", 1); }
Type s() { return Type::prim("s", 1); }
Type t() { return Type::prim("t", 2); }

Type A1() {
  return Type::div(q(), make_graph<Type>(2, {{s(), {0}}, {Type::dollar(2), {0, 1}}, {r(), {1}}}, {}));
}

Type A2() {
  return Type::div(t(), make_graph<Type>(3, {{r(), {0}}, {Type::dollar(2), {2, 1}}, {s(), {2}}}, {0, 1}));
}

Type A3() { return Type::div(q(), make_graph<Type>(3, {{Type::dollar(3), {1, 2, 0}}, {t(), {2, 1}}}, {})); }

Type A4() { return Type::times(make_graph<Type>(2, {{A1(), {0, 1}}, {p(), {0, 1}}}, {0, 1})); }

Sequent derivation_example() {
  auto h = make_graph<Type>(4, {{A2(), {0, 1}}, {p(), {0, 2}}, {A3(), {1, 2, 3}}}, {0, 2});
  return {h, A4()};
}

Sequent y_graph() {
  auto pu = Type::prim("p", 1);
  return {make_graph<Type>(2, {{pu, {0}}, {pu, {1}}}, {0}), pu};
}

Sequent hmalc_example() {
  Type t1 = Type::disj(Type::times(make_graph<Type>(2, {{p(), {1, 0}}}, {0, 1})), p());
  Type q2 = Type::prim("q", 2);
  Type t2 = Type::div(q2, make_graph<Type>(3, {{p(), {0, 1}}, {Type::dollar(2), {1, 2}}}, {0, 2}));
  Type t3 = Type::times(make_graph<Type>(2, {{q2, {0, 1}}, {t2, {0, 1}}}, {}));
  return {make_graph<Type>(3, {{t1, {0, 1}}, {t2, {1, 2}}, {t2, {0, 2}}}, {}), t3};
}

}  // namespace hlc::samples
