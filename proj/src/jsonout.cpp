#include "coxkit/jsonout.hpp"

#include <cstdio>

namespace coxkit {

std::string approx12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

ojson scalar_json(const TrigScalar& t, bool hint) {
  if (!hint) return t.str();
  ojson o;
  o["exact"] = t.str();
  o["approx"] = approx12(t.approx());
  return o;
}

ojson vec_json(const Vec& v, bool hint) {
  ojson arr = ojson::array();
  for (const TrigScalar& t : v) arr.push_back(scalar_json(t, hint));
  return arr;
}

ojson report(const std::string& verb, ojson inputs, ojson result,
             ojson certificates, bool undecided) {
  ojson o;
  o["verb"] = verb;
  o["inputs"] = std::move(inputs);
  o["result"] = std::move(result);
  o["certificates"] = std::move(certificates);
  o["undecided"] = undecided;
  return o;
}

std::string render(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace coxkit
