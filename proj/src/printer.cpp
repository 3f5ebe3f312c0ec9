// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/printer.hpp"

#include <sstream>

namespace reaudit::sol {

namespace {

// Higher binds tighter. Postfix/primary forms render without parens.
int precedence(const Expr& e) {
    const auto* bin = std::get_if<Expr::Binary>(&e.node);
    if (!bin)
        return 100;
    switch (bin->op) {
    case BinOp::Or:
        return 1;
    case BinOp::And:
        return 2;
    case BinOp::Eq:
    case BinOp::Ne:
        return 3;
    case BinOp::Lt:
    case BinOp::Gt:
    case BinOp::Le:
    case BinOp::Ge:
        return 4;
    case BinOp::Add:
    case BinOp::Sub:
        return 5;
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::Mod:
        return 6;
    }
    return 100;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

class Printer {
public:
    std::string unit(const SourceUnit& u) {
        out_ << "pragma solidity " << u.pragma.text << ";\n";
        for (const auto& file : u.imports)
            out_ << "import " << quote(file) << ";\n";
        for (const auto& c : u.contracts) {
            out_ << "\n";
            contract(c);
        }
        return out_.str();
    }

    std::string expression(const Expr& e) {
        expr(e);
        return out_.str();
    }

private:
    std::ostringstream out_;
    int indent_ = 0;

    void line_start() {
        for (int i = 0; i < indent_; ++i)
            out_ << "    ";
    }

    void contract(const ContractDef& c) {
        out_ << "contract " << c.name << " {\n";
        ++indent_;
        for (const auto& v : c.state_vars) {
            line_start();
            out_ << render_type(v.type) << " " << to_string(v.visibility) << " " << v.name;
            if (v.initializer) {
                out_ << " = ";
                expr(*v.initializer);
            }
            out_ << ";\n";
        }
        if (c.ctor)
            function(*c.ctor);
        for (const auto& f : c.functions)
            function(f);
        if (c.fallback)
            function(*c.fallback);
        --indent_;
        out_ << "}\n";
    }

    void function(const FunctionDef& f) {
        out_ << "\n";
        line_start();
        if (f.is_constructor) {
            out_ << "constructor(";
        } else if (!f.name) {
            out_ << "function(";
        } else {
            out_ << "function " << *f.name << "(";
        }
        for (size_t i = 0; i < f.params.size(); ++i) {
            if (i)
                out_ << ", ";
            out_ << render_type(f.params[i].type) << " " << f.params[i].name;
        }
        out_ << ") " << to_string(f.visibility);
        if (f.payable)
            out_ << " payable";
        out_ << " {\n";
        ++indent_;
        block(f.body);
        --indent_;
        line_start();
        out_ << "}\n";
    }

    void block(const Block& b) {
        for (const auto& s : b)
            stmt(s);
    }

    void stmt(const Stmt& s) {
        line_start();
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Stmt::VarDecl>) {
                    out_ << render_type(node.type) << " " << node.name;
                    if (node.init) {
                        out_ << " = ";
                        expr(*node.init);
                    }
                    out_ << ";\n";
                } else if constexpr (std::is_same_v<T, Stmt::Assign>) {
                    expr(*node.lvalue);
                    out_ << (node.op == AssignOp::Assign      ? " = "
                             : node.op == AssignOp::AddAssign ? " += "
                                                              : " -= ");
                    expr(*node.value);
                    out_ << ";\n";
                } else if constexpr (std::is_same_v<T, Stmt::Require>) {
                    out_ << "require(";
                    expr(*node.cond);
                    if (node.message)
                        out_ << ", " << quote(*node.message);
                    out_ << ");\n";
                } else if constexpr (std::is_same_v<T, Stmt::If>) {
                    out_ << "if (";
                    expr(*node.cond);
                    out_ << ") {\n";
                    ++indent_;
                    block(node.then_block);
                    --indent_;
                    line_start();
                    out_ << "}";
                    if (node.else_block) {
                        out_ << " else {\n";
                        ++indent_;
                        block(*node.else_block);
                        --indent_;
                        line_start();
                        out_ << "}";
                    }
                    out_ << "\n";
                } else if constexpr (std::is_same_v<T, Stmt::ExprStmt>) {
                    expr(*node.expr);
                    out_ << ";\n";
                } else if constexpr (std::is_same_v<T, Stmt::Emit>) {
                    out_ << "emit " << node.event << "(";
                    args(node.args);
                    out_ << ");\n";
                } else {
                    static_assert(std::is_same_v<T, Stmt::Return>);
                    out_ << "return";
                    if (node.value) {
                        out_ << " ";
                        expr(*node.value);
                    }
                    out_ << ";\n";
                }
            },
            s.node);
    }

    void args(const std::vector<ExprPtr>& list) {
        for (size_t i = 0; i < list.size(); ++i) {
            if (i)
                out_ << ", ";
            expr(*list[i]);
        }
    }

    void child(const Expr& e, int parent_prec) {
        if (precedence(e) <= parent_prec) {
            out_ << "(";
            expr(e);
            out_ << ")";
        } else {
            expr(e);
        }
    }

    void expr(const Expr& e) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Expr::NumberLit>) {
                    out_ << u128_to_string(node.value);
                } else if constexpr (std::is_same_v<T, Expr::BoolLit>) {
                    out_ << (node.value ? "true" : "false");
                } else if constexpr (std::is_same_v<T, Expr::AddressLit>) {
                    out_ << node.hex;
                } else if constexpr (std::is_same_v<T, Expr::StringLit>) {
                    out_ << quote(node.value);
                } else if constexpr (std::is_same_v<T, Expr::Ident>) {
                    out_ << node.name;
                } else if constexpr (std::is_same_v<T, Expr::Member>) {
                    child(*node.base, 99);
                    out_ << "." << node.field;
                } else if constexpr (std::is_same_v<T, Expr::IndexOf>) {
                    child(*node.base, 99);
                    out_ << "[";
                    expr(*node.key);
                    out_ << "]";
                } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                    const int prec = precedence(e);
                    // Left-associative chain: the left child may share the
                    // parent precedence, the right child must bind tighter.
                    if (precedence(*node.lhs) < prec) {
                        out_ << "(";
                        expr(*node.lhs);
                        out_ << ")";
                    } else {
                        expr(*node.lhs);
                    }
                    out_ << " " << to_string(node.op) << " ";
                    child(*node.rhs, prec);
                } else if constexpr (std::is_same_v<T, Expr::ExternalCall>) {
                    child(*node.target, 99);
                    if (node.kind == CallKind::Transfer || node.kind == CallKind::Send) {
                        out_ << (node.kind == CallKind::Transfer ? ".transfer(" : ".send(");
                        expr(*node.value);
                        out_ << ")";
                    } else {
                        out_ << ".call.value(";
                        expr(*node.value);
                        out_ << ")";
                        if (node.gas) {
                            out_ << ".gas(";
                            expr(*node.gas);
                            out_ << ")";
                        }
                        out_ << "(";
                        if (node.payload) {
                            out_ << "abi.encodeWithSignature(" << quote(node.payload->signature);
                            for (const auto& a : node.payload->args) {
                                out_ << ", ";
                                expr(*a);
                            }
                            out_ << ")";
                        }
                        out_ << ")";
                    }
                } else if constexpr (std::is_same_v<T, Expr::Call>) {
                    if (node.base) {
                        child(*node.base, 99);
                        out_ << ".";
                    }
                    out_ << node.name << "(";
                    args(node.args);
                    out_ << ")";
                } else {
                    static_assert(std::is_same_v<T, Expr::BuiltinRef>);
                    switch (node.which) {
                    case Builtin::MsgSender:
                        out_ << "msg.sender";
                        break;
                    case Builtin::MsgValue:
                        out_ << "msg.value";
                        break;
                    case Builtin::TxOrigin:
                        out_ << "tx.origin";
                        break;
                    case Builtin::BlockNumber:
                        out_ << "block.number";
                        break;
                    case Builtin::SelfAddress:
                        out_ << "address(this)";
                        break;
                    case Builtin::SelfBalance:
                        out_ << "address(this).balance";
                        break;
                    }
                }
            },
            e.node);
    }
};

}  // namespace

std::string render_type(const SolType& type) {
    switch (type.kind) {
    case SolType::Kind::Uint:
        return "uint";
    case SolType::Kind::Bool:
        return "bool";
    case SolType::Kind::Address:
        return "address";
    case SolType::Kind::AddressPayable:
        return "address payable";
    case SolType::Kind::Mapping:
        return "mapping (address => uint)";
    case SolType::Kind::Contract:
        return type.contract_name;
    }
    return "?";
}

std::string render(const SourceUnit& unit) {
    return Printer{}.unit(unit);
}

std::string render(const Expr& expr) {
    return Printer{}.expression(expr);
}

}  // namespace reaudit::sol
