#include "t0form/io.hpp"

#include <fstream>
#include <sstream>

namespace t0form {

namespace {

struct Token {
    std::string text;
    std::size_t line, column;  // 1-based
};

// Tokenizes ignoring blank lines and "#" comments.
std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t line = 1, col = 1;
    std::string cur;
    std::size_t cur_line = 0, cur_col = 0;
    auto flush = [&] {
        if (!cur.empty()) {
            tokens.push_back({cur, cur_line, cur_col});
            cur.clear();
        }
    };
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '\n') {
            flush();
            in_comment = false;
            ++line;
            col = 1;
            continue;
        }
        if (in_comment) {
            ++col;
            continue;
        }
        if (ch == '#') {
            flush();
            in_comment = true;
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            flush();
        } else {
            if (cur.empty()) {
                cur_line = line;
                cur_col = col;
            }
            cur += ch;
        }
        ++col;
    }
    flush();
    return tokens;
}

long long parse_int(const Token& t, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(t.text, &pos);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(t.line, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
    }
}

UnitEntry parse_entry(const Token& t, int k) {
    if (t.text == "*") return UnitEntry::zero();
    long long e = parse_int(t, "entry exponent or '*'");
    if (e < 0) throw ParseError(t.line, t.column, "entry exponent must be nonnegative");
    return UnitEntry::unit(e, k);
}

}  // namespace

T0Matrix parse_matrix(const std::string& text) {
    std::vector<Token> tokens = tokenize(text);
    std::size_t pos = 0;
    auto need = [&](const char* what) -> const Token& {
        if (pos >= tokens.size()) {
            std::size_t l = tokens.empty() ? 1 : tokens.back().line;
            throw ParseError(l, 1, std::string("unexpected end of input, expected ") + what);
        }
        return tokens[pos++];
    };

    const Token& magic = need("'t0matrix' header");
    if (magic.text != "t0matrix")
        throw ParseError(magic.line, magic.column, "expected 't0matrix' header");
    long long k = parse_int(need("group order k"), "group order k");
    long long m = parse_int(need("row count m"), "row count m");
    long long n = parse_int(need("column count n"), "column count n");
    if (k < 1) throw ParseError(magic.line, magic.column, "group order must be >= 1");
    if (m < 0 || n < 0) throw ParseError(magic.line, magic.column, "dimensions must be nonnegative");

    T0Matrix out(static_cast<int>(k), static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            out(i, j) = parse_entry(need("matrix entry"), static_cast<int>(k));
    if (pos != tokens.size())
        throw ParseError(tokens[pos].line, tokens[pos].column, "trailing content after matrix");
    return out;
}

std::string format_entry(UnitEntry e) {
    return e.is_zero() ? "*" : std::to_string(e.exponent());
}

std::string format_matrix(const T0Matrix& a) {
    std::ostringstream out;
    out << "t0matrix " << a.k() << ' ' << a.num_rows() << ' ' << a.num_cols() << '\n';
    for (std::size_t i = 0; i < a.num_rows(); ++i) {
        for (std::size_t j = 0; j < a.num_cols(); ++j) {
            if (j) out << ' ';
            out << format_entry(a(i, j));
        }
        out << '\n';
    }
    return out.str();
}

namespace {

MonomialMatrix parse_monomial(const std::vector<Token>& tokens, std::size_t& pos, int k) {
    auto need = [&](const char* what) -> const Token& {
        if (pos >= tokens.size()) {
            std::size_t l = tokens.empty() ? 1 : tokens.back().line;
            throw ParseError(l, 1, std::string("unexpected end of input, expected ") + what);
        }
        return tokens[pos++];
    };
    const Token& ptag = need("'perm:' line");
    if (ptag.text != "perm:") throw ParseError(ptag.line, ptag.column, "expected 'perm:'");
    std::vector<std::size_t> perm;
    while (pos < tokens.size() && tokens[pos].text != "diag:") {
        long long v = parse_int(tokens[pos], "permutation image");
        if (v < 0) throw ParseError(tokens[pos].line, tokens[pos].column, "negative permutation image");
        perm.push_back(static_cast<std::size_t>(v));
        ++pos;
    }
    const Token& dtag = need("'diag:' line");
    if (dtag.text != "diag:") throw ParseError(dtag.line, dtag.column, "expected 'diag:'");
    std::vector<UnitEntry> diag;
    while (diag.size() < perm.size()) {
        const Token& t = need("diagonal exponent");
        long long e = parse_int(t, "diagonal exponent");
        if (e < 0) throw ParseError(t.line, t.column, "diagonal exponent must be nonnegative");
        diag.push_back(UnitEntry::unit(e, k));
    }
    try {
        return MonomialMatrix(k, std::move(perm), std::move(diag));
    } catch (const std::exception& e) {
        throw ParseError(ptag.line, ptag.column, e.what());
    }
}

}  // namespace

Certificate parse_certificate(const std::string& text, int k) {
    std::vector<Token> tokens = tokenize(text);
    std::size_t pos = 0;
    MonomialMatrix m1 = parse_monomial(tokens, pos, k);
    MonomialMatrix m2 = parse_monomial(tokens, pos, k);
    if (pos != tokens.size())
        throw ParseError(tokens[pos].line, tokens[pos].column, "trailing content after certificate");
    return {std::move(m1), std::move(m2)};
}

std::string format_certificate(const Certificate& cert) {
    std::ostringstream out;
    for (const MonomialMatrix* m : {&cert.m1, &cert.m2}) {
        out << "perm:";
        for (std::size_t p : m->perm()) out << ' ' << p;
        out << "\ndiag:";
        for (UnitEntry d : m->diag()) out << ' ' << d.exponent();
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

T0Matrix read_matrix_file(const std::string& path) { return parse_matrix(read_file(path)); }

Certificate read_certificate_file(const std::string& path, int k) {
    return parse_certificate(read_file(path), k);
}

}  // namespace t0form
