#include <lhcert/error.hpp>
#include <lhcert/serialize.hpp>

namespace lhcert {

nlohmann::ordered_json certificate_to_json(const GapCertificate& cert) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(cert.kind);
  j["t"] = cert.t.to_string();
  if (cert.s)
    j["s"] = cert.s->to_string();
  else
    j["s"] = nullptr;
  j["p"] = cert.candidate.num().get_str();
  j["q"] = cert.candidate.den().get_str();
  j["n"] = cert.n;
  j["W"] = cert.witness.get_str();
  j["A_upper"] = cert.a_upper;
  j["gap_lower_bound"] = cert.gap_lower_bound.to_string();
  j["prec_bits"] = cert.prec_used;
  return j;
}

GapCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    GapCertificate c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "tan")
      c.kind = CertKind::Tan;
    else if (kind == "bessel")
      c.kind = CertKind::Bessel;
    else
      throw Error(ErrorKind::Parse, "unknown certificate kind '" + kind + "'");
    c.t = Rational::parse(j.at("t").get<std::string>());
    if (!j.at("s").is_null()) c.s = Rational::parse(j.at("s").get<std::string>());
    if (c.kind == CertKind::Bessel && !c.s) throw Error(ErrorKind::Parse, "bessel certificate without s");
    c.candidate = rat_normalize(parse_integer(j.at("p").get<std::string>()),
                                parse_integer(j.at("q").get<std::string>()));
    c.n = j.at("n").get<unsigned>();
    c.witness = parse_integer(j.at("W").get<std::string>());
    c.a_upper = j.at("A_upper").get<std::string>();
    c.gap_lower_bound = Rational::parse(j.at("gap_lower_bound").get<std::string>());
    c.prec_used = j.at("prec_bits").get<unsigned>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace lhcert
