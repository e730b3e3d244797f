#include "core/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace radial {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  return value;
}

std::vector<std::vector<int>> cyclic_rows(int p) {
  if (p < 2) throw InputError("cyclic factor order must be at least 2");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(p));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) rows[static_cast<std::size_t>(a)].push_back((a + b) % p);
  return rows;
}

SpecDocument::Factor parse_factor(const Json& f) {
  SpecDocument::Factor out;
  if (f.is_string()) {
    const auto name = f.get<std::string>();
    if (name.rfind("cyclic:", 0) != 0) throw InputError("unknown factor shorthand '" + name + "'");
    const int p = parse_int(std::string_view(name).substr(7), "cyclic order");
    out.declared_order = p;
    out.table = cyclic_rows(p);
    return out;
  }
  if (!f.is_object()) throw InputError("a factor must be an object or a \"cyclic:p\" string");
  if (f.contains("order")) out.declared_order = f.at("order").get<int>();
  if (!f.contains("table")) throw InputError("factor is missing \"table\"");
  out.table = f.at("table").get<std::vector<std::vector<int>>>();
  if (f.contains("inverse")) out.inverse = f.at("inverse").get<std::vector<int>>();
  return out;
}

Json parse_json_text(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("cannot parse " + std::string(what) + ": " + e.what());
  }
}

bool looks_like_word(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
      return false;
  }
  return true;
}

}  // namespace

SpecDocument parse_spec_document(const Json& doc) {
  try {
    if (!doc.is_object()) throw InputError("a spec document must be a JSON object");
    const auto variant = doc.value("variant", std::string("free_product"));
    SpecDocument out;
    if (variant == "free_group") {
      out.variant = SpecDocument::Variant::free_group;
      if (!doc.contains("rank")) throw InputError("free_group spec is missing \"rank\"");
      out.rank = doc.at("rank").get<int>();
    } else if (variant == "free_product") {
      out.variant = SpecDocument::Variant::free_product;
      if (!doc.contains("factors") || !doc.at("factors").is_array())
        throw InputError("free_product spec needs a \"factors\" array");
      for (const auto& f : doc.at("factors")) out.factors.push_back(parse_factor(f));
    } else {
      throw InputError("unknown spec variant '" + variant + "'");
    }
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed spec document: ") + e.what());
  }
}

std::optional<GroupSpec> named_spec(std::string_view name) {
  if (name.rfind("fp:", 0) == 0) {
    auto body = name.substr(3);
    auto x = body.find('x');
    if (x == std::string_view::npos) throw InputError("named spec must look like fp:MxP, got '" + std::string(name) + "'");
    return GroupSpec::cyclic_product(parse_int(body.substr(0, x), "factor count"),
                                     parse_int(body.substr(x + 1), "factor order"));
  }
  if (name.rfind("free:", 0) == 0) return GroupSpec::free_group(parse_int(name.substr(5), "rank"));
  return std::nullopt;
}

SpecDocument load_spec_document(std::string_view source) {
  if (auto spec = named_spec(source)) {
    SpecDocument doc;
    if (spec->is_free_group()) {
      doc.variant = SpecDocument::Variant::free_group;
      doc.rank = spec->rank();
    } else {
      for (const auto& f : spec->factors()) doc.factors.push_back({f.order(), f.rows(), std::nullopt});
    }
    return doc;
  }
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && source[first] == '{')
    return parse_spec_document(parse_json_text(source, "spec document"));

  std::ifstream in{std::string(source)};
  if (!in) throw InputError("cannot open spec file '" + std::string(source) + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_document(parse_json_text(buffer.str(), "spec file '" + std::string(source) + "'"));
}

GroupSpec load_spec(std::string_view source) {
  if (auto spec = named_spec(source)) return *spec;
  return GroupSpec::from_document(load_spec_document(source));
}

Json spec_to_json(const GroupSpec& spec) {
  Json j;
  if (spec.is_free_group()) {
    j["variant"] = "free_group";
    j["rank"] = spec.rank();
    return j;
  }
  j["variant"] = "free_product";
  j["factors"] = Json::array();
  for (const auto& f : spec.factors()) j["factors"].push_back({{"order", f.order()}, {"table", f.rows()}});
  return j;
}

Json word_to_json(const Word& w) {
  Json j = Json::array();
  for (Letter l : w.letters()) j.push_back({static_cast<int>(l.slot), static_cast<int>(l.value)});
  return j;
}

std::string render_word(const Word& w) { return word_to_json(w).dump(); }

Json tuple_to_json(const WordTuple& t) {
  Json j = Json::array();
  for (const auto& w : t) j.push_back(word_to_json(w));
  return j;
}

Word parse_word(const GroupSpec& spec, const Json& j) {
  if (!looks_like_word(j)) throw InputError("a word must be a list of [slot, value] pairs, got " + j.dump());
  std::vector<Letter> raw;
  for (const auto& item : j) {
    const auto slot = item[0].get<long long>();
    const auto value = item[1].get<long long>();
    if (slot < -128 || slot > 127 || value < -128 || value > 127)
      throw InputError("letter [" + std::to_string(slot) + "," + std::to_string(value) + "] out of range");
    raw.push_back({static_cast<std::int8_t>(slot), static_cast<std::int8_t>(value)});
  }
  return reduce(spec, raw);
}

Word parse_word(const GroupSpec& spec, std::string_view text) {
  if (text == "e") return Word{};
  return parse_word(spec, parse_json_text(text, "word"));
}

WordTuple parse_tuple(const GroupSpec& spec, const Json& j, int k) {
  if (k < 1) throw InputError("tensor rank k must be at least 1, got " + std::to_string(k));
  if (looks_like_word(j)) return WordTuple(static_cast<std::size_t>(k), parse_word(spec, j));
  if (!j.is_array()) throw InputError("a tuple must be a list of words, got " + j.dump());
  if (static_cast<int>(j.size()) != k)
    throw InputError("tuple has " + std::to_string(j.size()) + " components but k = " + std::to_string(k));
  WordTuple out;
  for (const auto& w : j) out.push_back(parse_word(spec, w));
  return out;
}

WordTuple parse_tuple(const GroupSpec& spec, std::string_view text, int k) {
  if (text == "e") return WordTuple(static_cast<std::size_t>(k));
  return parse_tuple(spec, parse_json_text(text, "word tuple"), k);
}

}  // namespace radial
