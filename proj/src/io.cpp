#include "braceforge/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace braceforge {

SchemaError::SchemaError(std::string path, std::string field, const std::string& what)
    : InputError("SchemaError: " + (path.empty() ? std::string("<json>") : path) + ": " +
                 (field.empty() ? std::string("/") : field) + ": " + what),
      path_(std::move(path)),
      field_(std::move(field)) {}

namespace {

struct Ctx {
  const std::string& path;
  std::string field;

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(path, field, what); }
  Ctx at(const std::string& key) const { return {path, field + "/" + key}; }
  Ctx at(std::size_t k) const { return at(std::to_string(k)); }
};

void exact_keys(const json& j, const std::set<std::string>& keys, const Ctx& c) {
  if (!j.is_object()) c.fail("expected an object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) c.at(k).fail("unknown field");
  for (const auto& k : keys)
    if (!j.contains(k)) c.at(k).fail("missing field");
}

int get_int(const json& j, const Ctx& c) {
  if (!j.is_number_integer()) c.fail("expected an integer");
  return j.get<int>();
}

std::vector<int> int_row(const json& j, int len, int bound, const Ctx& c) {
  if (!j.is_array()) c.fail("expected an array");
  if (len >= 0 && static_cast<int>(j.size()) != len)
    c.fail("expected length " + std::to_string(len) + ", got " + std::to_string(j.size()));
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const int v = get_int(j[k], c.at(k));
    if (v < 0 || (bound >= 0 && v >= bound)) c.at(k).fail("value out of range");
    out.push_back(v);
  }
  return out;
}

Table square(const json& j, int n, int bound, const Ctx& c) {
  if (!j.is_array()) c.fail("expected an array");
  if (n < 0) n = static_cast<int>(j.size());
  if (static_cast<int>(j.size()) != n) c.fail("expected " + std::to_string(n) + " rows");
  Table t;
  for (int r = 0; r < n; ++r) t.push_back(int_row(j[r], n, bound, c.at(r)));
  return t;
}

int get_n(const json& j, const Ctx& c) {
  const int n = get_int(j, c);
  if (n < 1) c.fail("n must be positive");
  return n;
}

// Swap of 0 and `identity`, or the identity map.
std::vector<int> swap_map(int n, int identity) {
  std::vector<int> m(n);
  for (int x = 0; x < n; ++x) m[x] = x == identity ? 0 : (x == 0 ? identity : x);
  return m;
}

// Finds the identity of a table and moves it to 0. Returns the relabeling.
std::vector<int> normalise(Table& t, const std::string& what, Warnings* warnings) {
  const int n = static_cast<int>(t.size());
  const auto id = find_identity(t);
  if (!id) fail("NoIdentity", {}, what);
  if (*id != 0) {
    t = move_identity_to_zero(t, *id);
    if (warnings)
      warnings->push_back(what + ": identity " + std::to_string(*id) + " relabeled to 0");
  }
  return swap_map(n, *id);
}

Perm perm_of(const json& j, int degree, const Ctx& c) {
  const std::vector<int> m = int_row(j, degree, degree, c);
  std::vector<char> seen(m.size(), 0);
  for (int v : m) {
    if (seen[v]) c.fail("not a permutation");
    seen[v] = 1;
  }
  return Perm(m);
}

json perms_json(const std::vector<Perm>& ps) {
  json a = json::array();
  for (const Perm& p : ps) a.push_back(p.map());
  return a;
}

struct LoadedBrace {
  SkewBrace brace;
  std::vector<int> relabel;  // file label -> internal label
};

LoadedBrace load_brace(const json& j, Warnings* warnings, const Ctx& c) {
  exact_keys(j, {"n", "add", "circ"}, c);
  const int n = get_n(j["n"], c.at("n"));
  Table add = square(j["add"], n, n, c.at("add"));
  Table circ = square(j["circ"], n, n, c.at("circ"));
  const auto ia = find_identity(add);
  const auto ic = find_identity(circ);
  if (!ia) fail("NoIdentity", {}, "add");
  if (!ic) fail("NoIdentity", {}, "circ");
  if (*ia != *ic) fail("IdentityMismatch", {*ia, *ic});
  std::vector<int> relabel = normalise(add, c.field.empty() ? "brace" : c.field, warnings);
  circ = move_identity_to_zero(circ, *ic);
  return {validate_brace(add, circ), std::move(relabel)};
}

}  // namespace

json to_json(const FiniteGroup& g) { return {{"n", g.order()}, {"table", g.table()}}; }

json to_json(const SkewBrace& b) {
  return {{"n", b.order()}, {"add", b.additive().table()}, {"circ", b.multiplicative().table()}};
}

json to_json(const ActionTriple& t) {
  return {{"nu", perms_json(t.nu)}, {"mu", perms_json(t.mu)}, {"sigma", perms_json(t.sigma)}};
}

json to_json(const Triplet& t) {
  return {{"chi", to_json(t.chi)}, {"beta", t.beta}, {"tau", t.tau}};
}

json to_json(const Extension& e) {
  return {{"E", to_json(e.e)}, {"H", to_json(e.h)}, {"I", to_json(e.i)}, {"inj", e.inj},
          {"proj", e.proj}};
}

FiniteGroup group_from_json(const json& j, Warnings* warnings, const std::string& path) {
  const Ctx c{path, ""};
  exact_keys(j, {"n", "table"}, c);
  const int n = get_n(j["n"], c.at("n"));
  Table t = square(j["table"], n, n, c.at("table"));
  normalise(t, "group", warnings);
  return validate_group(t);
}

SkewBrace brace_from_json(const json& j, Warnings* warnings, const std::string& path) {
  return load_brace(j, warnings, {path, ""}).brace;
}

ActionTriple triple_from_json(const json& j, const std::string& path) {
  const Ctx c{path, ""};
  exact_keys(j, {"nu", "mu", "sigma"}, c);
  ActionTriple t;
  int len = -1, degree = -1;
  for (auto [key, out] : {std::pair{"nu", &t.nu}, {"mu", &t.mu}, {"sigma", &t.sigma}}) {
    const json& a = j[key];
    const Ctx ck = c.at(key);
    if (!a.is_array() || a.empty()) ck.fail("expected a non-empty array");
    if (len >= 0 && static_cast<int>(a.size()) != len) ck.fail("length differs from nu");
    len = static_cast<int>(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (degree < 0) degree = a[k].is_array() ? static_cast<int>(a[k].size()) : 0;
      out->push_back(perm_of(a[k], degree, ck.at(k)));
    }
  }
  return t;
}

Triplet triplet_from_json(const json& j, const std::string& path) {
  const Ctx c{path, ""};
  exact_keys(j, {"chi", "beta", "tau"}, c);
  Triplet t;
  t.chi = triple_from_json(j["chi"], path);
  const int nh = static_cast<int>(t.chi.nu.size());
  const int ni = t.chi.nu[0].degree();
  t.beta = square(j["beta"], nh, ni, c.at("beta"));
  t.tau = square(j["tau"], nh, ni, c.at("tau"));
  return t;
}

Extension extension_from_json(const json& j, Warnings* warnings, const std::string& path) {
  const Ctx c{path, ""};
  exact_keys(j, {"E", "H", "I", "inj", "proj"}, c);
  LoadedBrace e = load_brace(j["E"], warnings, c.at("E"));
  LoadedBrace h = load_brace(j["H"], warnings, c.at("H"));
  LoadedBrace i = load_brace(j["I"], warnings, c.at("I"));
  const std::vector<int> inj_raw = int_row(j["inj"], i.brace.order(), e.brace.order(), c.at("inj"));
  const std::vector<int> proj_raw =
      int_row(j["proj"], e.brace.order(), h.brace.order(), c.at("proj"));
  std::vector<int> inj(inj_raw.size()), proj(proj_raw.size());
  for (std::size_t y = 0; y < inj.size(); ++y) inj[i.relabel[y]] = e.relabel[inj_raw[y]];
  for (std::size_t x = 0; x < proj.size(); ++x) proj[e.relabel[x]] = h.relabel[proj_raw[x]];
  return make_extension(std::move(e.brace), std::move(h.brace), std::move(i.brace), std::move(inj),
                        std::move(proj));
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "", "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path, "", e.what());
  }
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << canonical_dump(j);
}

std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Group: return "group";
    case EntryKind::Brace: return "brace";
    case EntryKind::Triple: return "triple";
    case EntryKind::Triplet: return "triplet";
    case EntryKind::Extension: return "extension";
  }
  return "";
}

namespace {

EntryKind kind_from_string(const std::string& s, const Ctx& c) {
  for (EntryKind k : {EntryKind::Group, EntryKind::Brace, EntryKind::Triple, EntryKind::Triplet,
                      EntryKind::Extension})
    if (to_string(k) == s) return k;
  c.fail("unknown kind '" + s + "'");
}

EntryKind infer_kind(const json& j, const Ctx& c) {
  if (!j.is_object()) c.fail("expected an object");
  if (j.contains("table")) return EntryKind::Group;
  if (j.contains("add")) return EntryKind::Brace;
  if (j.contains("nu")) return EntryKind::Triple;
  if (j.contains("chi")) return EntryKind::Triplet;
  if (j.contains("E")) return EntryKind::Extension;
  c.fail("cannot tell what this file holds");
}

// Validates and returns the payload in canonical (relabeled) form.
json canonical_payload(EntryKind k, const json& p, const std::string& path, Warnings* w) {
  switch (k) {
    case EntryKind::Group: return to_json(group_from_json(p, w, path));
    case EntryKind::Brace: return to_json(brace_from_json(p, w, path));
    case EntryKind::Triple: return to_json(triple_from_json(p, path));
    case EntryKind::Triplet: return to_json(triplet_from_json(p, path));
    case EntryKind::Extension: return to_json(extension_from_json(p, w, path));
  }
  return {};
}

}  // namespace

CatalogEntry entry_from_json(const json& j, const std::string& path, Warnings* warnings) {
  const Ctx c{path, ""};
  CatalogEntry e;
  if (j.is_object() && j.contains("kind")) {
    exact_keys(j, {"kind", "name", "payload", "provenance"}, c);
    for (const char* key : {"kind", "name", "provenance"})
      if (!j[key].is_string()) c.at(key).fail("expected a string");
    e.kind = kind_from_string(j["kind"].get<std::string>(), c.at("kind"));
    e.name = j["name"].get<std::string>();
    e.provenance = j["provenance"].get<std::string>();
    e.payload = canonical_payload(e.kind, j["payload"], path, warnings);
  } else {
    e.kind = infer_kind(j, c);
    e.name = std::filesystem::path(path).stem().string();
    e.provenance = "derived";
    e.payload = canonical_payload(e.kind, j, path, warnings);
  }
  return e;
}

CatalogEntry load(const std::string& path, Warnings* warnings) {
  return entry_from_json(read_json(path), path, warnings);
}

json to_json(const CatalogEntry& e) {
  return {{"kind", to_string(e.kind)}, {"name", e.name}, {"payload", e.payload},
          {"provenance", e.provenance}};
}

void save(const CatalogEntry& e, const std::string& path) { write_json(path, to_json(e)); }

json report(const std::string& command, json result) {
  return {{"schema_version", kReportSchemaVersion}, {"command", command}, {"result", std::move(result)}};
}

}  // namespace braceforge
