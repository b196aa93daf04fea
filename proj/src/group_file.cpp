#include "weylcheck/group_file.hpp"

#include "weylcheck/errors.hpp"

#include <istream>
#include <sstream>

namespace weylcheck {

namespace {

int header_value(const std::string& token, const std::string& key) {
    if (token.rfind(key + "=", 0) != 0) throw ParseError("expected " + key + "=<value>, got '" + token + "'");
    try {
        std::size_t used = 0;
        const int v = std::stoi(token.substr(key.size() + 1), &used);
        if (used + key.size() + 1 != token.size()) throw ParseError("bad number in '" + token + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad number in '" + token + "'");
    }
}

SignedPermutation parse_perm(const std::string& line, int n) {
    std::istringstream is(line);
    std::string signs;
    is >> signs;
    if (static_cast<int>(signs.size()) != n) throw ParseError("sign word needs " + std::to_string(n) + " characters: " + line);
    std::vector<int> negated;
    for (int j = 0; j < n; ++j) {
        if (signs[j] == '-') negated.push_back(j);
        else if (signs[j] != '+') throw ParseError("signs are '+' or '-': " + line);
    }
    std::vector<int> images;
    int x = 0;
    while (is >> x) images.push_back(x - 1);
    if (!is.eof() || static_cast<int>(images.size()) != n)
        throw ParseError("permutation needs " + std::to_string(n) + " images: " + line);
    try {
        return SignedPermutation(images, negated);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + ": " + line);
    }
}

DoubledMatrix parse_matrix(const std::string& line, int n) {
    std::istringstream is(line);
    std::vector<int> entries;
    int x = 0;
    while (is >> x) entries.push_back(x);
    if (!is.eof() || entries.size() != static_cast<std::size_t>(n * n))
        throw ParseError("matrix row needs " + std::to_string(n * n) + " integers: " + line);
    return DoubledMatrix(n, std::move(entries));
}

} // namespace

std::string write_group_description(const FiniteGroup& G) {
    std::ostringstream os;
    os << "kind " << G.model().kind() << '\n';
    if (!G.name().empty()) os << "# " << G.name() << ", order " << G.order() << '\n';
    for (Index g : G.generators()) {
        const auto e = G.model().decode(G.key(g));
        if (!e) throw std::invalid_argument("group elements of kind " + G.model().kind() + " cannot be written");
        if (const auto* p = std::get_if<SignedPermutation>(&*e)) {
            os << p->to_string() << '\n';
        } else {
            const auto& m = std::get<DoubledMatrix>(*e);
            const auto& v = m.doubled_entries();
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
            os << '\n';
        }
    }
    return os.str();
}

GroupDescription read_group_description(std::istream& in) {
    GroupDescription d;
    std::string line;
    bool have_header = false, matrix = false;
    int n = 0;
    while (std::getline(in, line)) {
        if (const auto pos = line.find_first_not_of(" \t\r"); pos == std::string::npos) continue;
        if (line.back() == '\r') line.pop_back();
        if (line[line.find_first_not_of(" \t")] == '#') {
            if (have_header && d.name.empty()) d.name = line.substr(line.find('#') + 1);
            continue;
        }
        if (!have_header) {
            std::istringstream is(line);
            std::string word, kind, size, denom, extra;
            is >> word >> kind >> size >> denom >> extra;
            if (word != "kind") throw ParseError("first line must be 'kind ...': " + line);
            if (kind == "signed-perm") {
                if (!denom.empty()) throw ParseError("unexpected field after n= in: " + line);
                n = header_value(size, "n");
                if (n < 1 || n > SignedPermutation::kMaxDegree) throw ParseError("signed-perm degree out of range");
            } else if (kind == "matrix") {
                n = header_value(size, "n");
                if (header_value(denom, "denom") != 2 || !extra.empty()) throw ParseError("matrices need denom=2: " + line);
                if (n < 1 || n > DoubledMatrix::kMaxDim) throw ParseError("matrix dimension out of range");
                matrix = true;
            } else {
                throw ParseError("unknown kind '" + kind + "'");
            }
            have_header = true;
            continue;
        }
        if (matrix) d.generators.emplace_back(parse_matrix(line, n));
        else d.generators.emplace_back(parse_perm(line, n));
    }
    if (!have_header) throw ParseError("empty group description");
    if (d.generators.empty()) d.generators.emplace_back(matrix ? GroupElement(DoubledMatrix::identity(n))
                                                              : GroupElement(SignedPermutation(n)));
    const auto first = d.name.find_first_not_of(' ');
    d.name = first == std::string::npos ? "" : d.name.substr(first, d.name.find(',') - first);
    return d;
}

FiniteGroup load_group(std::istream& in, std::size_t bound) {
    auto d = read_group_description(in);
    return generate(d.generators, bound, d.name);
}

} // namespace weylcheck
