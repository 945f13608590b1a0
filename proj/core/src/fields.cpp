#include "swlw/fields.hpp"

#include "swlw/errors.hpp"

namespace swlw {

const char* frame_name(Frame f) { return f == Frame::Lagrangian ? "lagrangian" : "eulerian"; }

Frame parse_frame(const std::string& s) {
  if (s == "lagrangian") return Frame::Lagrangian;
  if (s == "eulerian") return Frame::Eulerian;
  throw ValidationError("unknown frame '" + s + "'");
}

const std::vector<double>& FieldSnapshot::get(const std::string& name) const {
  for (const auto& [k, v] : fields)
    if (k == name) return v;
  throw ValidationError("snapshot has no field '" + name + "'");
}

bool FieldSnapshot::has(const std::string& name) const {
  for (const auto& [k, v] : fields)
    if (k == name) return true;
  return false;
}

void FieldSnapshot::set(const std::string& name, std::vector<double> values) {
  for (auto& [k, v] : fields)
    if (k == name) {
      v = std::move(values);
      return;
    }
  fields.emplace_back(name, std::move(values));
}

bool FieldSnapshot::operator==(const FieldSnapshot& o) const {
  return frame == o.frame && t == o.t && coords == o.coords && fields == o.fields;
}

FieldSnapshot EulerianFields::snapshot() const {
  FieldSnapshot s;
  s.frame = Frame::Eulerian;
  s.t = t;
  s.coords = x;
  std::vector<double> pr(psi.size()), pi(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    pr[i] = psi[i].real();
    pi[i] = psi[i].imag();
  }
  s.set("rho", rho);
  s.set("u", u);
  s.set("w1", w[0]);
  s.set("w2", w[1]);
  s.set("h1", h[0]);
  s.set("h2", h[1]);
  s.set("theta", theta);
  s.set("psi_re", pr);
  s.set("psi_im", pi);
  s.set("y", y);
  return s;
}

}  // namespace swlw
