#pragma once

namespace strictpat {

template <class F>
Term map_evars(const Term& t, F&& f) {
  switch (t.kind()) {
    case Term::Kind::Const:
    case Term::Kind::Var:
      return t;
    case Term::Kind::Lam:
      return Term::lam(t.name(), t.label(), t.domain(), map_evars(t.body(), f));
    case Term::Kind::App:
      return Term::app(map_evars(t.fun(), f), map_evars(t.arg(), f), t.label());
    case Term::Kind::EVar:
      return f(t);
  }
  return t;
}

}  // namespace strictpat
