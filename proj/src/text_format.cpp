#include "gbx/text_format.hpp"

#include "gbx/errors.hpp"
#include "gbx/family.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <unordered_set>

namespace gbx {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    std::string_view identifier()
    {
        skip_space();
        std::size_t begin = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(begin, pos_ - begin);
    }

    Exponent number()
    {
        skip_space();
        Exponent value = 0;
        auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{} || end == text_.data() + pos_)
            fail("expected an exponent");
        pos_ = static_cast<std::size_t>(end - text_.data());
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }
    std::size_t column() const noexcept { return pos_ + 1; }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

// term := factor ('*' factor)* ; factor := '1' | identifier ('^' number)?
Monomial parse_term(Cursor& in, VariableRegistry& registry)
{
    std::vector<Monomial::Factor> factors;
    do {
        char c = in.peek();
        if (c == '1') {
            auto word = in.identifier();
            if (word != "1")
                in.fail("unexpected '" + std::string(word) + "'");
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            in.fail(c == '\0' ? "expected a term" : std::string("unexpected '") + c + "'");
        auto name = in.identifier();
        Exponent exp = 1;
        if (in.accept('^'))
            exp = in.number();
        factors.push_back({registry.intern(name), exp});
    } while (in.accept('*'));
    return Monomial::from_factors(std::move(factors));
}

Polynomial parse_sum(Cursor& in, VariableRegistry& registry)
{
    if (in.peek() == '0') {
        in.identifier();
        if (!in.done())
            in.fail("trailing input after 0");
        return {};
    }
    std::vector<Monomial> terms;
    do
        terms.push_back(parse_term(in, registry));
    while (in.accept('+'));
    if (!in.done())
        in.fail(std::string("unexpected '") + in.peek() + "'");
    return Polynomial::from_terms(std::move(terms));
}

std::string_view strip_comment(std::string_view line)
{
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s)
{
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        auto end = text.find('\n', begin);
        if (end == std::string_view::npos) {
            if (begin < text.size())
                lines.push_back(text.substr(begin));
            break;
        }
        lines.push_back(text.substr(begin, end - begin));
        begin = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_names(std::string_view text)
{
    std::vector<std::string_view> names;
    std::size_t pos = 0;
    auto sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (pos < text.size()) {
        while (pos < text.size() && sep(text[pos]))
            ++pos;
        std::size_t begin = pos;
        while (pos < text.size() && !sep(text[pos]))
            ++pos;
        if (pos > begin)
            names.push_back(text.substr(begin, pos - begin));
    }
    return names;
}

} // namespace

Monomial parse_monomial(std::string_view text, VariableRegistry& registry, std::size_t line)
{
    Cursor in(text, line);
    Monomial m = parse_term(in, registry);
    if (!in.done())
        in.fail(std::string("unexpected '") + in.peek() + "'");
    return m;
}

Polynomial parse_polynomial(std::string_view text, VariableRegistry& registry, std::size_t line)
{
    Cursor in(text, line);
    return parse_sum(in, registry);
}

ParsedIdeal parse_ideal(std::string_view text, RegistryPtr registry)
{
    ParsedIdeal out;
    out.registry = registry ? std::move(registry) : std::make_shared<VariableRegistry>();
    std::vector<Polynomial> gens;
    auto lines = split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        auto line = lines[k];
        auto hash = line.find('#');
        if (hash != std::string_view::npos) {
            auto comment = trim(line.substr(hash + 1));
            if (comment.starts_with("vars:")) {
                for (auto name : split_names(comment.substr(5))) {
                    if (!VariableRegistry::is_identifier(name))
                        throw ParseError("malformed variable name '" + std::string(name) + "'", k + 1, hash + 1);
                    out.registry->intern(name);
                }
            } else if (comment.starts_with("family n=")) {
                unsigned n = 0;
                auto digits = comment.substr(9);
                auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
                if (ec != std::errc{} || end != digits.data() + digits.size())
                    throw ParseError("malformed family header", k + 1, hash + 1);
                out.family_n = n;
            }
        }
        auto body = strip_comment(line);
        if (blank(body))
            continue;
        gens.push_back(parse_polynomial(body, *out.registry, k + 1));
    }
    out.generators = GeneratorSet(std::move(gens));
    return out;
}

std::string format_ideal(const GeneratorSet& gens, const VariableRegistry& registry)
{
    std::string out = "# vars:";
    for (const auto& name : registry.names())
        out += " " + name;
    out += "\n";
    for (const auto& g : gens)
        out += to_string(g, registry) + "\n";
    return out;
}

std::string format_family(const FamilyInstance& family)
{
    return "# family n=" + std::to_string(family.n()) + "\n" + format_ideal(family.generators(), *family.registry());
}

std::string format_polynomial(const Polynomial& p, const VariableRegistry& registry, const MonomialOrder& order)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& t : terms_descending(order, p)) {
        if (!out.empty())
            out += " + ";
        out += to_string(t, registry);
    }
    return out;
}

std::string format_certificate(const DerivationCertificate& cert, const VariableRegistry& registry)
{
    std::string out = "cert v1\nstart " + to_string(cert.start, registry) + "\n";
    for (const auto& step : cert.steps)
        out += "step " + std::to_string(step.gen_index) + " " + to_string(step.multiplier, registry) + " " +
               std::to_string(step.side) + "\n";
    out += "end " + to_string(cert.end, registry) + "\n";
    return out;
}

DerivationCertificate parse_certificate(std::string_view text, VariableRegistry& registry)
{
    DerivationCertificate cert;
    bool seen_header = false, seen_start = false, seen_end = false;
    auto lines = split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        auto body = trim(strip_comment(lines[k]));
        if (body.empty())
            continue;
        const std::size_t line = k + 1;
        auto space = body.find(' ');
        auto keyword = body.substr(0, space);
        auto rest = space == std::string_view::npos ? std::string_view{} : trim(body.substr(space));
        if (!seen_header) {
            if (body != "cert v1")
                throw ParseError("expected 'cert v1'", line, 1);
            seen_header = true;
        } else if (seen_end) {
            throw ParseError("content after 'end'", line, 1);
        } else if (keyword == "start" && !seen_start) {
            cert.start = parse_monomial(rest, registry, line);
            seen_start = true;
        } else if (keyword == "step" && seen_start) {
            auto fields = split_names(rest);
            if (fields.size() != 3)
                throw ParseError("step needs <gen_index> <multiplier> <side>", line, 1);
            RewriteStep step;
            auto parse_index = [&](std::string_view field, auto& value) {
                auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
                if (ec != std::errc{} || end != field.data() + field.size())
                    throw ParseError("malformed number '" + std::string(field) + "'", line, 1);
            };
            parse_index(fields[0], step.gen_index);
            step.multiplier = parse_monomial(fields[1], registry, line);
            parse_index(fields[2], step.side);
            if (step.side > 1)
                throw ParseError("side must be 0 or 1", line, 1);
            cert.steps.push_back(std::move(step));
        } else if (keyword == "end" && seen_start) {
            cert.end = parse_monomial(rest, registry, line);
            seen_end = true;
        } else {
            throw ParseError("unexpected '" + std::string(keyword) + "'", line, 1);
        }
    }
    if (!seen_end)
        throw ParseError("certificate is missing its 'end' line", lines.size(), 1);
    return cert;
}

std::vector<Monomial> parse_monomial_list(std::string_view text, VariableRegistry& registry)
{
    std::vector<Monomial> out;
    auto lines = split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        auto body = strip_comment(lines[k]);
        if (!blank(body))
            out.push_back(parse_monomial(body, registry, k + 1));
    }
    return out;
}

std::vector<VarId> parse_var_order(std::string_view text, const VariableRegistry& registry)
{
    std::vector<VarId> order;
    std::unordered_set<std::uint32_t> seen;
    for (auto line : split_lines(text))
        for (auto name : split_names(strip_comment(line))) {
            auto id = registry.find(name);
            if (!id)
                throw ConfigError("variable order names unknown variable '" + std::string(name) + "'");
            if (!seen.insert(id->value).second)
                throw ConfigError("variable order lists '" + std::string(name) + "' twice");
            order.push_back(*id);
        }
    return order;
}

std::vector<MonomialOrder::WeightAssignment> parse_weights(std::string_view text, const VariableRegistry& registry)
{
    std::vector<MonomialOrder::WeightAssignment> out;
    auto lines = split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        auto fields = split_names(strip_comment(lines[k]));
        if (fields.empty())
            continue;
        if (fields.size() != 2)
            throw ParseError("expected '<variable> <prime_index>'", k + 1, 1);
        auto id = registry.find(fields[0]);
        if (!id)
            throw ConfigError("weights name unknown variable '" + std::string(fields[0]) + "'");
        std::uint32_t index = 0;
        auto [end, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), index);
        if (ec != std::errc{} || end != fields[1].data() + fields[1].size())
            throw ParseError("malformed prime index '" + std::string(fields[1]) + "'", k + 1, 1);
        out.push_back({*id, index});
    }
    return out;
}

std::string read_text(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::string& path, std::string_view text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw ConfigError("cannot write '" + path + "'");
}

} // namespace gbx
