// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "reaudit/lexer.hpp"

namespace reaudit::sol {

namespace {

struct Version {
    int major = 0;
    int minor = 0;
    int patch = 0;

    auto operator<=>(const Version&) const = default;
};

constexpr Version kSupportedLo{0, 4, 22};  // inclusive
constexpr Version kSupportedHi{0, 6, 0};   // exclusive

Version bump_patch(Version v) {
    return {v.major, v.minor, v.patch + 1};
}

// Parses "0.4.22"-style version text; missing components default to 0.
std::optional<Version> parse_version(std::string_view text) {
    Version v;
    int parts[3] = {0, 0, 0};
    int part = 0;
    size_t i = 0;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        return std::nullopt;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            parts[part] = parts[part] * 10 + (text[i] - '0');
        } else if (text[i] == '.' && part < 2) {
            ++part;
        } else {
            return std::nullopt;
        }
        ++i;
    }
    v.major = parts[0];
    v.minor = parts[1];
    v.patch = parts[2];
    return v;
}

struct Interval {
    Version lo{0, 0, 0};                 // inclusive
    Version hi{9999, 0, 0};              // exclusive
};

std::optional<Interval> comparator_interval(std::string_view part) {
    std::string_view op;
    for (std::string_view candidate : {">=", "<=", ">", "<", "^", "~", "="}) {
        if (part.substr(0, candidate.size()) == candidate) {
            op = candidate;
            break;
        }
    }
    auto v = parse_version(part.substr(op.size()));
    if (!v)
        return std::nullopt;
    Interval iv;
    if (op == ">=") {
        iv.lo = *v;
    } else if (op == ">") {
        iv.lo = bump_patch(*v);
    } else if (op == "<") {
        iv.hi = *v;
    } else if (op == "<=") {
        iv.hi = bump_patch(*v);
    } else if (op == "^") {
        iv.lo = *v;
        iv.hi = v->major == 0 ? Version{0, v->minor + 1, 0} : Version{v->major + 1, 0, 0};
    } else if (op == "~") {
        iv.lo = *v;
        iv.hi = Version{v->major, v->minor + 1, 0};
    } else {  // exact, with or without '='
        iv.lo = *v;
        iv.hi = bump_patch(*v);
    }
    return iv;
}

}  // namespace

bool version_supported(const std::string& range_text) {
    Interval range;
    size_t i = 0;
    bool any = false;
    while (i < range_text.size()) {
        while (i < range_text.size() && std::isspace(static_cast<unsigned char>(range_text[i])))
            ++i;
        size_t start = i;
        while (i < range_text.size() && !std::isspace(static_cast<unsigned char>(range_text[i])))
            ++i;
        if (start == i)
            continue;
        auto iv = comparator_interval(std::string_view(range_text).substr(start, i - start));
        if (!iv)
            return false;
        range.lo = std::max(range.lo, iv->lo);
        range.hi = std::min(range.hi, iv->hi);
        any = true;
    }
    if (!any)
        return false;
    const Version lo = std::max(range.lo, kSupportedLo);
    const Version hi = std::min(range.hi, kSupportedHi);
    return lo < hi;
}

namespace {

const std::set<std::string> kRejectedMembers = {
    "event", "struct", "enum", "modifier", "using", "library", "interface",
};

const std::set<std::string> kRejectedStatements = {
    "for", "while", "do", "assembly", "throw", "delete", "new", "selfdestruct", "continue",
    "break",
};

class Parser {
public:
    Parser(std::string_view source, std::vector<Token> tokens)
        : source_(source), tokens_(std::move(tokens)) {}

    SourceUnit parse_unit() {
        SourceUnit unit;
        unit.pragma = parse_pragma();
        while (peek().is_ident("import")) {
            next();
            const Token file = expect(Token::Kind::String, "an import path");
            unit.imports.push_back(file.text);
            expect_punct(";");
        }
        while (!peek().is(Token::Kind::End, "")) {
            if (peek().is_ident("library") || peek().is_ident("interface"))
                throw UnsupportedConstruct(peek().pos, peek().text + " declaration");
            unit.contracts.push_back(parse_contract());
        }
        if (unit.contracts.empty())
            throw ParseError(peek().pos, "a contract definition", describe(peek()));
        std::set<std::string> names;
        for (const auto& c : unit.contracts) {
            if (!names.insert(c.name).second)
                throw ParseError(c.pos, "unique contract names", "duplicate contract " + c.name);
        }
        std::set<std::string> contract_names;
        for (const auto& c : unit.contracts)
            contract_names.insert(c.name);
        for (auto& c : unit.contracts)
            rewrite_event_calls(c, contract_names);
        return unit;
    }

private:
    std::string_view source_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;

    const Token& peek(size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    static std::string describe(const Token& t) {
        switch (t.kind) {
        case Token::Kind::End:
            return "end of input";
        case Token::Kind::String:
            return "string \"" + t.text + "\"";
        default:
            return "'" + t.text + "'";
        }
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind)
            throw ParseError(peek().pos, what, describe(peek()));
        return next();
    }

    Token expect_punct(const std::string& p) {
        if (!peek().is_punct(p))
            throw ParseError(peek().pos, "'" + p + "'", describe(peek()));
        return next();
    }

    Token expect_ident(const std::string& name) {
        if (!peek().is_ident(name))
            throw ParseError(peek().pos, "'" + name + "'", describe(peek()));
        return next();
    }

    // --- pragma ------------------------------------------------------------

    VersionRange parse_pragma() {
        if (!peek().is_ident("pragma"))
            throw ParseError(peek().pos, "'pragma solidity ...;'", describe(peek()));
        next();
        expect_ident("solidity");
        const size_t range_begin = peek().offset;
        while (!peek().is_punct(";") && !peek().is(Token::Kind::End, ""))
            next();
        const Token& semi = peek();
        if (!semi.is_punct(";"))
            throw ParseError(semi.pos, "';' closing the pragma", describe(semi));
        std::string text(source_.substr(range_begin, semi.offset - range_begin));
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
            text.pop_back();
        next();
        if (!version_supported(text))
            throw UnsupportedVersion(text);
        return VersionRange{text};
    }

    // --- types -------------------------------------------------------------

    bool at_type_keyword() const {
        const Token& t = peek();
        return t.is_ident("uint") || t.is_ident("uint256") || t.is_ident("bool") ||
               t.is_ident("address") || t.is_ident("mapping");
    }

    SolType parse_type() {
        const Token t = next();
        if (t.is_ident("uint") || t.is_ident("uint256"))
            return SolType::uint256();
        if (t.is_ident("bool"))
            return SolType::boolean();
        if (t.is_ident("address")) {
            if (peek().is_ident("payable")) {
                next();
                return SolType::address_payable();
            }
            return SolType::address();
        }
        if (t.is_ident("mapping")) {
            expect_punct("(");
            expect_ident("address");
            expect_punct("=>");
            if (!peek().is_ident("uint") && !peek().is_ident("uint256"))
                throw UnsupportedConstruct(peek().pos, "mapping value type other than uint");
            next();
            expect_punct(")");
            return SolType::mapping();
        }
        if (t.kind == Token::Kind::Ident)
            return SolType::contract(t.text);
        throw ParseError(t.pos, "a type", describe(t));
    }

    // --- contracts ---------------------------------------------------------

    ContractDef parse_contract() {
        const Token kw = expect_ident("contract");
        ContractDef contract;
        contract.pos = kw.pos;
        contract.name = expect(Token::Kind::Ident, "a contract name").text;
        if (peek().is_ident("is"))
            throw UnsupportedConstruct(peek().pos, "inheritance");
        expect_punct("{");
        while (!peek().is_punct("}")) {
            if (peek().kind == Token::Kind::End)
                throw ParseError(peek().pos, "'}' closing the contract", describe(peek()));
            if (kRejectedMembers.count(peek().text) && peek().kind == Token::Kind::Ident)
                throw UnsupportedConstruct(peek().pos, peek().text + " declaration");
            if (peek().is_ident("function") || peek().is_ident("constructor")) {
                parse_function_into(contract);
            } else {
                contract.state_vars.push_back(parse_state_var());
            }
        }
        next();
        std::set<std::string> fn_names;
        for (const auto& f : contract.functions) {
            if (!fn_names.insert(*f.name).second)
                throw ParseError(f.pos, "unique function names (no overloading)",
                    "duplicate function " + *f.name);
        }
        return contract;
    }

    StateVarDecl parse_state_var() {
        StateVarDecl var;
        var.pos = peek().pos;
        var.type = parse_type();
        if (peek().is_ident("public") || peek().is_ident("private")) {
            var.visibility = peek().is_ident("public") ? Visibility::Public : Visibility::Private;
            next();
        } else if (peek().is_ident("internal") || peek().is_ident("constant")) {
            throw UnsupportedConstruct(peek().pos, peek().text + " state variable");
        }
        var.name = expect(Token::Kind::Ident, "a state variable name").text;
        if (peek().is_punct("=")) {
            next();
            var.initializer = parse_expr();
        }
        expect_punct(";");
        return var;
    }

    void parse_function_into(ContractDef& contract) {
        const Token kw = next();  // 'function' or 'constructor'
        FunctionDef fn;
        fn.pos = kw.pos;
        if (kw.is_ident("constructor")) {
            fn.is_constructor = true;
            fn.name = "constructor";
        } else if (peek().kind == Token::Kind::Ident) {
            const std::string name = next().text;
            if (name == contract.name) {  // legacy named-constructor spelling
                fn.is_constructor = true;
                fn.name = "constructor";
            } else {
                fn.name = name;
            }
        }
        expect_punct("(");
        if (!peek().is_punct(")")) {
            while (true) {
                fn.params.push_back(parse_param());
                if (peek().is_punct(",")) {
                    next();
                    continue;
                }
                break;
            }
        }
        expect_punct(")");

        while (peek().kind == Token::Kind::Ident && !peek().is_punct("{")) {
            const Token& m = peek();
            if (m.is_ident("public") || m.is_ident("external") || m.is_ident("private") ||
                m.is_ident("internal")) {
                fn.visibility = m.is_ident("public")     ? Visibility::Public
                                : m.is_ident("external") ? Visibility::External
                                : m.is_ident("private")  ? Visibility::Private
                                                         : Visibility::Internal;
                next();
            } else if (m.is_ident("payable")) {
                fn.payable = true;
                next();
            } else if (m.is_ident("returns")) {
                throw UnsupportedConstruct(m.pos, "returns clause");
            } else if (m.is_ident("view") || m.is_ident("pure") || m.is_ident("constant")) {
                throw UnsupportedConstruct(m.pos, m.text + " mutability modifier");
            } else {
                throw UnsupportedConstruct(m.pos, "function modifier " + m.text);
            }
        }

        fn.body = parse_block();
        index_statements(fn.body);

        if (!fn.name.has_value()) {
            if (!fn.params.empty())
                throw ParseError(fn.pos, "a parameterless fallback", "fallback with parameters");
            fn.visibility = Visibility::External;
            if (contract.fallback.has_value())
                throw ParseError(fn.pos, "a single fallback function", "a second fallback");
            contract.fallback = std::move(fn);
        } else if (fn.is_constructor) {
            if (contract.ctor.has_value())
                throw ParseError(fn.pos, "a single constructor", "a second constructor");
            contract.ctor = std::move(fn);
        } else {
            contract.functions.push_back(std::move(fn));
        }
    }

    Param parse_param() {
        if (at_type_keyword()) {
            SolType type = parse_type();
            const Token name = expect(Token::Kind::Ident, "a parameter name");
            return {name.text, type};
        }
        const Token first = expect(Token::Kind::Ident, "a parameter");
        if (peek().kind == Token::Kind::Ident) {
            // contract-typed parameter: "FairDare fd"
            const Token name = next();
            return {name.text, SolType::contract(first.text)};
        }
        // Untyped parameters occur in pre-0.5 sources; they are used as call
        // targets, so they default to address.
        return {first.text, SolType::address()};
    }

    // --- statements ----------------------------------------------------------

    Block parse_block() {
        expect_punct("{");
        Block block;
        while (!peek().is_punct("}")) {
            if (peek().kind == Token::Kind::End)
                throw ParseError(peek().pos, "'}' closing the block", describe(peek()));
            block.push_back(parse_stmt());
        }
        next();
        return block;
    }

    Stmt parse_stmt() {
        const Token& t = peek();
        Stmt stmt;
        stmt.pos = t.pos;

        if (t.kind == Token::Kind::Ident && kRejectedStatements.count(t.text))
            throw UnsupportedConstruct(t.pos, t.text + " statement");

        if (t.is_ident("require")) {
            next();
            expect_punct("(");
            Stmt::Require node;
            node.cond = parse_expr();
            if (peek().is_punct(",")) {
                next();
                node.message = expect(Token::Kind::String, "a revert message string").text;
            }
            expect_punct(")");
            expect_punct(";");
            stmt.node = std::move(node);
            return stmt;
        }
        if (t.is_ident("if")) {
            next();
            expect_punct("(");
            Stmt::If node;
            node.cond = parse_expr();
            expect_punct(")");
            node.then_block = parse_block();
            if (peek().is_ident("else")) {
                next();
                if (peek().is_ident("if")) {
                    Block chained;
                    chained.push_back(parse_stmt());
                    node.else_block = std::move(chained);
                } else {
                    node.else_block = parse_block();
                }
            }
            stmt.node = std::move(node);
            return stmt;
        }
        if (t.is_ident("return")) {
            next();
            Stmt::Return node;
            if (!peek().is_punct(";"))
                node.value = parse_expr();
            expect_punct(";");
            stmt.node = std::move(node);
            return stmt;
        }
        if (t.is_ident("emit")) {
            next();
            Stmt::Emit node;
            node.event = expect(Token::Kind::Ident, "an event name").text;
            expect_punct("(");
            node.args = parse_args();
            expect_punct(")");
            expect_punct(";");
            stmt.node = std::move(node);
            return stmt;
        }
        if (t.is_ident("mapping"))
            throw UnsupportedConstruct(t.pos, "local mapping declaration");
        if (at_type_keyword() && !t.is_ident("address")) {
            stmt.node = parse_var_decl();
            return stmt;
        }
        if (t.is_ident("address") && !peek(1).is_punct("(")) {
            // A leading "address" not followed by '(' starts a declaration;
            // address(this) and address(expr) casts take the expression path.
            stmt.node = parse_var_decl();
            return stmt;
        }

        ExprPtr expr = parse_expr();
        if (peek().is_punct("=") || peek().is_punct("+=") || peek().is_punct("-=")) {
            const Token op = next();
            if (!std::holds_alternative<Expr::Ident>(expr->node) &&
                !std::holds_alternative<Expr::IndexOf>(expr->node))
                throw ParseError(op.pos, "an assignable target (variable or mapping entry)",
                    "a complex expression");
            Stmt::Assign node;
            node.lvalue = std::move(expr);
            node.op = op.text == "=" ? AssignOp::Assign
                      : op.text == "+=" ? AssignOp::AddAssign
                                        : AssignOp::SubAssign;
            node.value = parse_expr();
            expect_punct(";");
            stmt.node = std::move(node);
            return stmt;
        }
        expect_punct(";");
        stmt.node = Stmt::ExprStmt{std::move(expr)};
        return stmt;
    }

    Stmt::VarDecl parse_var_decl() {
        Stmt::VarDecl node;
        node.type = parse_type();
        node.name = expect(Token::Kind::Ident, "a variable name").text;
        if (peek().is_punct("=")) {
            next();
            node.init = parse_expr();
        }
        expect_punct(";");
        return node;
    }

    void index_statements(Block& body) {
        int counter = 0;
        index_block(body, counter);
    }

    void index_block(Block& block, int& counter) {
        for (Stmt& stmt : block) {
            stmt.index = counter++;
            if (auto* iff = std::get_if<Stmt::If>(&stmt.node)) {
                index_block(iff->then_block, counter);
                if (iff->else_block)
                    index_block(*iff->else_block, counter);
            }
        }
    }

    // --- expressions ---------------------------------------------------------

    std::vector<ExprPtr> parse_args() {
        std::vector<ExprPtr> args;
        if (peek().is_punct(")"))
            return args;
        while (true) {
            args.push_back(parse_expr());
            if (peek().is_punct(",")) {
                next();
                continue;
            }
            return args;
        }
    }

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
        auto e = std::make_unique<Expr>();
        e->pos = pos;
        e->node = Expr::Binary{op, std::move(lhs), std::move(rhs)};
        return e;
    }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (peek().is_punct("||")) {
            const SourcePos pos = next().pos;
            lhs = make_binary(BinOp::Or, std::move(lhs), parse_and(), pos);
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_equality();
        while (peek().is_punct("&&")) {
            const SourcePos pos = next().pos;
            lhs = make_binary(BinOp::And, std::move(lhs), parse_equality(), pos);
        }
        return lhs;
    }

    ExprPtr parse_equality() {
        ExprPtr lhs = parse_relational();
        while (peek().is_punct("==") || peek().is_punct("!=")) {
            const Token op = next();
            lhs = make_binary(op.text == "==" ? BinOp::Eq : BinOp::Ne, std::move(lhs),
                parse_relational(), op.pos);
        }
        return lhs;
    }

    ExprPtr parse_relational() {
        ExprPtr lhs = parse_additive();
        while (peek().is_punct("<") || peek().is_punct(">") || peek().is_punct("<=") ||
               peek().is_punct(">=")) {
            const Token op = next();
            const BinOp bin = op.text == "<"    ? BinOp::Lt
                              : op.text == ">"  ? BinOp::Gt
                              : op.text == "<=" ? BinOp::Le
                                                : BinOp::Ge;
            lhs = make_binary(bin, std::move(lhs), parse_additive(), op.pos);
        }
        return lhs;
    }

    ExprPtr parse_additive() {
        ExprPtr lhs = parse_multiplicative();
        while (peek().is_punct("+") || peek().is_punct("-")) {
            const Token op = next();
            lhs = make_binary(op.text == "+" ? BinOp::Add : BinOp::Sub, std::move(lhs),
                parse_multiplicative(), op.pos);
        }
        return lhs;
    }

    ExprPtr parse_multiplicative() {
        ExprPtr lhs = parse_postfix();
        while (peek().is_punct("*") || peek().is_punct("/") || peek().is_punct("%")) {
            const Token op = next();
            const BinOp bin = op.text == "*"   ? BinOp::Mul
                              : op.text == "/" ? BinOp::Div
                                               : BinOp::Mod;
            lhs = make_binary(bin, std::move(lhs), parse_postfix(), op.pos);
        }
        return lhs;
    }

    ExprPtr parse_postfix() {
        ExprPtr expr = parse_primary();
        while (true) {
            if (peek().is_punct("[")) {
                const SourcePos pos = next().pos;
                auto e = std::make_unique<Expr>();
                e->pos = pos;
                Expr::IndexOf node;
                node.base = std::move(expr);
                node.key = parse_expr();
                expect_punct("]");
                e->node = std::move(node);
                expr = std::move(e);
                continue;
            }
            if (peek().is_punct(".")) {
                next();
                const Token member = expect(Token::Kind::Ident, "a member name");
                if (member.text == "transfer" || member.text == "send") {
                    expect_punct("(");
                    auto e = std::make_unique<Expr>();
                    e->pos = member.pos;
                    Expr::ExternalCall node;
                    node.target = std::move(expr);
                    node.kind = member.text == "transfer" ? CallKind::Transfer : CallKind::Send;
                    node.value = parse_expr();
                    expect_punct(")");
                    e->node = std::move(node);
                    expr = std::move(e);
                    continue;
                }
                if (member.text == "call") {
                    expr = parse_call_value(std::move(expr), member.pos);
                    continue;
                }
                if (peek().is_punct("(")) {
                    next();
                    auto e = std::make_unique<Expr>();
                    e->pos = member.pos;
                    Expr::Call node;
                    node.base = std::move(expr);
                    node.name = member.text;
                    node.args = parse_args();
                    expect_punct(")");
                    e->node = std::move(node);
                    expr = std::move(e);
                    continue;
                }
                auto e = std::make_unique<Expr>();
                e->pos = member.pos;
                e->node = Expr::Member{std::move(expr), member.text};
                expr = std::move(e);
                continue;
            }
            return expr;
        }
    }

    // expr.call.value(v)[.gas(g)]([abi.encodeWithSignature("f()", args...)])
    ExprPtr parse_call_value(ExprPtr target, SourcePos pos) {
        expect_punct(".");
        expect_ident("value");
        expect_punct("(");
        Expr::ExternalCall node;
        node.target = std::move(target);
        node.kind = CallKind::CallValue;
        node.value = parse_expr();
        expect_punct(")");
        if (peek().is_punct(".")) {
            next();
            expect_ident("gas");
            expect_punct("(");
            node.gas = parse_expr();
            expect_punct(")");
        }
        expect_punct("(");
        if (!peek().is_punct(")")) {
            expect_ident("abi");
            expect_punct(".");
            expect_ident("encodeWithSignature");
            expect_punct("(");
            CallPayload payload;
            const Token sig = expect(Token::Kind::String, "a function signature string");
            payload.signature = sig.text;
            const size_t paren = sig.text.find('(');
            payload.fn_name = sig.text.substr(0, paren);
            if (payload.fn_name.empty())
                throw ParseError(sig.pos, "a signature of the form name(types)",
                    "\"" + sig.text + "\"");
            while (peek().is_punct(",")) {
                next();
                payload.args.push_back(parse_expr());
            }
            expect_punct(")");
            node.payload = std::move(payload);
        }
        expect_punct(")");
        auto e = std::make_unique<Expr>();
        e->pos = pos;
        e->node = std::move(node);
        return e;
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        auto e = std::make_unique<Expr>();
        e->pos = t.pos;

        if (t.kind == Token::Kind::Number) {
            next();
            if (t.text.size() == 42 && t.text[0] == '0' && (t.text[1] == 'x' || t.text[1] == 'X')) {
                std::string hex = t.text;
                std::transform(hex.begin(), hex.end(), hex.begin(),
                    [](unsigned char c) { return std::tolower(c); });
                e->node = Expr::AddressLit{std::move(hex)};
                return e;
            }
            const auto value = u128_from_string(t.text);
            if (!value)
                throw ParseError(t.pos, "a number within 128 bits", "'" + t.text + "'");
            e->node = Expr::NumberLit{*value};
            return e;
        }
        if (t.kind == Token::Kind::String) {
            next();
            e->node = Expr::StringLit{t.text};
            return e;
        }
        if (t.is_punct("(")) {
            next();
            ExprPtr inner = parse_expr();
            expect_punct(")");
            return inner;
        }
        if (t.is_ident("true") || t.is_ident("false")) {
            next();
            e->node = Expr::BoolLit{t.text == "true"};
            return e;
        }
        if (t.is_ident("msg") && peek(1).is_punct(".")) {
            next();
            next();
            const Token member = expect(Token::Kind::Ident, "sender or value");
            if (member.text == "sender")
                e->node = Expr::BuiltinRef{Builtin::MsgSender};
            else if (member.text == "value")
                e->node = Expr::BuiltinRef{Builtin::MsgValue};
            else
                throw UnsupportedConstruct(member.pos, "msg." + member.text);
            return e;
        }
        if (t.is_ident("tx") && peek(1).is_punct(".")) {
            next();
            next();
            const Token member = expect(Token::Kind::Ident, "origin");
            if (member.text != "origin")
                throw UnsupportedConstruct(member.pos, "tx." + member.text);
            e->node = Expr::BuiltinRef{Builtin::TxOrigin};
            return e;
        }
        if (t.is_ident("block") && peek(1).is_punct(".")) {
            next();
            next();
            const Token member = expect(Token::Kind::Ident, "number");
            if (member.text != "number")
                throw UnsupportedConstruct(member.pos, "block." + member.text);
            e->node = Expr::BuiltinRef{Builtin::BlockNumber};
            return e;
        }
        if (t.is_ident("address") && peek(1).is_punct("(") && peek(2).is_ident("this")) {
            next();
            next();
            next();
            expect_punct(")");
            if (peek().is_punct(".") && peek(1).is_ident("balance")) {
                next();
                next();
                e->node = Expr::BuiltinRef{Builtin::SelfBalance};
            } else {
                e->node = Expr::BuiltinRef{Builtin::SelfAddress};
            }
            return e;
        }
        if (t.is_ident("this"))
            throw UnsupportedConstruct(t.pos, "bare this (use address(this))");
        if (t.kind == Token::Kind::Ident) {
            next();
            if (peek().is_punct("(")) {
                next();
                Expr::Call node;
                node.name = t.text;
                node.args = parse_args();
                expect_punct(")");
                e->node = std::move(node);
                return e;
            }
            e->node = Expr::Ident{t.text};
            return e;
        }
        throw ParseError(t.pos, "an expression", describe(t));
    }

    // --- post-parse fixups -----------------------------------------------------

    // Statement-level calls to names that are neither declared functions nor
    // contracts are event emissions without a declaration, common in pre-0.5
    // sources.
    void rewrite_event_calls(ContractDef& contract, const std::set<std::string>& contract_names) {
        std::set<std::string> known = contract_names;
        for (const auto& f : contract.functions)
            known.insert(*f.name);
        auto walk = [&](auto&& self, Block& block) -> void {
            for (Stmt& stmt : block) {
                if (auto* iff = std::get_if<Stmt::If>(&stmt.node)) {
                    self(self, iff->then_block);
                    if (iff->else_block)
                        self(self, *iff->else_block);
                    continue;
                }
                auto* es = std::get_if<Stmt::ExprStmt>(&stmt.node);
                if (!es)
                    continue;
                auto* call = std::get_if<Expr::Call>(&es->expr->node);
                if (!call || call->base != nullptr)
                    continue;
                if (known.count(call->name) || call->name == "address")
                    continue;
                Stmt::Emit emit;
                emit.event = call->name;
                emit.args = std::move(call->args);
                stmt.node = std::move(emit);
            }
        };
        for (auto& f : contract.functions)
            walk(walk, f.body);
        if (contract.ctor)
            walk(walk, contract.ctor->body);
        if (contract.fallback)
            walk(walk, contract.fallback->body);
    }
};

}  // namespace

SourceUnit parse(std::string_view source) {
    Parser parser(source, tokenize(source));
    return parser.parse_unit();
}

}  // namespace reaudit::sol
