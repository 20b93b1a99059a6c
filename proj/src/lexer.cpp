#include "bcheck/lexer.hpp"

#include <cctype>
#include <map>

#include "bcheck/errors.hpp"

namespace bcheck {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::Integer: return "integer literal";
    case TokenKind::String: return "string literal";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::DotDot: return "'..'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::VerticalBar: return "'|'";
    case TokenKind::DoubleBar: return "'||'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::StarStar: return "'**'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Backslash: return "'\\'";
    case TokenKind::SetUnion: return "'\\/'";
    case TokenKind::SetInter: return "'/\\'";
    case TokenKind::Equal: return "'='";
    case TokenKind::NotEqual: return "'/='";
    case TokenKind::DefEq: return "'=='";
    case TokenKind::Less: return "'<'";
    case TokenKind::LessEqual: return "'<='";
    case TokenKind::Greater: return "'>'";
    case TokenKind::GreaterEqual: return "'>='";
    case TokenKind::Implies: return "'=>'";
    case TokenKind::Equivalence: return "'<=>'";
    case TokenKind::Ampersand: return "'&'";
    case TokenKind::OrKw: return "'or'";
    case TokenKind::NotKw: return "'not'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::Hash: return "'#'";
    case TokenKind::PredicateMarker: return "'#PREDICATE'";
    case TokenKind::Colon: return "':'";
    case TokenKind::NotColon: return "'/:'";
    case TokenKind::Assign: return "':='";
    case TokenKind::DoubleColon: return "'::'";
    case TokenKind::SubsetOf: return "'<:'";
    case TokenKind::StrictSubsetOf: return "'<<:'";
    case TokenKind::Maplet: return "'|->'";
    case TokenKind::Relation: return "'<->'";
    case TokenKind::PartialFn: return "'+->'";
    case TokenKind::TotalFn: return "'-->'";
    case TokenKind::PartialInj: return "'>+>'";
    case TokenKind::TotalInj: return "'>->'";
    case TokenKind::PartialSurj: return "'+->>'";
    case TokenKind::TotalSurj: return "'-->>'";
    case TokenKind::TotalBij: return "'>->>'";
    case TokenKind::Override: return "'<+'";
    case TokenKind::DomRestrict: return "'<|'";
    case TokenKind::RanRestrict: return "'|>'";
    case TokenKind::DomSubtract: return "'<<|'";
    case TokenKind::RanSubtract: return "'|>>'";
    case TokenKind::Tilde: return "'~'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::Percent: return "'%'";
    case TokenKind::EmptySeq: return "'<>'";
    case TokenKind::KwTrue: return "'TRUE'";
    case TokenKind::KwFalse: return "'FALSE'";
    case TokenKind::KwBool: return "'bool'";
    case TokenKind::KwMod: return "'mod'";
    case TokenKind::KwSucc: return "'succ'";
    case TokenKind::KwPred: return "'pred'";
    case TokenKind::KwPow: return "'POW'";
    case TokenKind::KwPow1: return "'POW1'";
    case TokenKind::KwFin: return "'FIN'";
    case TokenKind::KwCard: return "'card'";
    case TokenKind::KwMin: return "'min'";
    case TokenKind::KwMax: return "'max'";
    case TokenKind::KwDom: return "'dom'";
    case TokenKind::KwRan: return "'ran'";
    case TokenKind::KwSize: return "'size'";
    case TokenKind::KwFirst: return "'first'";
    case TokenKind::KwLast: return "'last'";
    case TokenKind::KwFront: return "'front'";
    case TokenKind::KwTail: return "'tail'";
    case TokenKind::KwNatural: return "'NATURAL'";
    case TokenKind::KwNatural1: return "'NATURAL1'";
    case TokenKind::KwInteger: return "'INTEGER'";
    case TokenKind::KwNat: return "'NAT'";
    case TokenKind::KwNat1: return "'NAT1'";
    case TokenKind::KwInt: return "'INT'";
    case TokenKind::KwBoolSet: return "'BOOL'";
    case TokenKind::KwStringSet: return "'STRING'";
    case TokenKind::KwMinInt: return "'MININT'";
    case TokenKind::KwMaxInt: return "'MAXINT'";
    case TokenKind::KwSkip: return "'skip'";
    case TokenKind::KwBegin: return "'BEGIN'";
    case TokenKind::KwEnd: return "'END'";
    case TokenKind::KwPre: return "'PRE'";
    case TokenKind::KwThen: return "'THEN'";
    case TokenKind::KwIf: return "'IF'";
    case TokenKind::KwElsif: return "'ELSIF'";
    case TokenKind::KwElse: return "'ELSE'";
    case TokenKind::KwSelect: return "'SELECT'";
    case TokenKind::KwWhen: return "'WHEN'";
    case TokenKind::KwChoice: return "'CHOICE'";
    case TokenKind::KwOr: return "'OR'";
    case TokenKind::KwAny: return "'ANY'";
    case TokenKind::KwWhere: return "'WHERE'";
    case TokenKind::KwMachine: return "'MACHINE'";
    case TokenKind::KwSets: return "'SETS'";
    case TokenKind::KwConstants: return "'CONSTANTS'";
    case TokenKind::KwProperties: return "'PROPERTIES'";
    case TokenKind::KwVariables: return "'VARIABLES'";
    case TokenKind::KwInvariant: return "'INVARIANT'";
    case TokenKind::KwAssertions: return "'ASSERTIONS'";
    case TokenKind::KwDefinitions: return "'DEFINITIONS'";
    case TokenKind::KwInitialisation: return "'INITIALISATION'";
    case TokenKind::KwOperations: return "'OPERATIONS'";
    case TokenKind::EndOfInput: return "end of input";
    }
    return "?";
}

namespace {

const std::map<std::string, TokenKind>& keyword_table() {
    static const std::map<std::string, TokenKind> table = {
        {"TRUE", TokenKind::KwTrue},
        {"FALSE", TokenKind::KwFalse},
        {"bool", TokenKind::KwBool},
        {"or", TokenKind::OrKw},
        {"not", TokenKind::NotKw},
        {"mod", TokenKind::KwMod},
        {"succ", TokenKind::KwSucc},
        {"pred", TokenKind::KwPred},
        {"POW", TokenKind::KwPow},
        {"POW1", TokenKind::KwPow1},
        {"FIN", TokenKind::KwFin},
        {"card", TokenKind::KwCard},
        {"min", TokenKind::KwMin},
        {"max", TokenKind::KwMax},
        {"dom", TokenKind::KwDom},
        {"ran", TokenKind::KwRan},
        {"size", TokenKind::KwSize},
        {"first", TokenKind::KwFirst},
        {"last", TokenKind::KwLast},
        {"front", TokenKind::KwFront},
        {"tail", TokenKind::KwTail},
        {"NATURAL", TokenKind::KwNatural},
        {"NATURAL1", TokenKind::KwNatural1},
        {"INTEGER", TokenKind::KwInteger},
        {"NAT", TokenKind::KwNat},
        {"NAT1", TokenKind::KwNat1},
        {"INT", TokenKind::KwInt},
        {"BOOL", TokenKind::KwBoolSet},
        {"STRING", TokenKind::KwStringSet},
        {"MININT", TokenKind::KwMinInt},
        {"MAXINT", TokenKind::KwMaxInt},
        {"skip", TokenKind::KwSkip},
        {"BEGIN", TokenKind::KwBegin},
        {"END", TokenKind::KwEnd},
        {"PRE", TokenKind::KwPre},
        {"THEN", TokenKind::KwThen},
        {"IF", TokenKind::KwIf},
        {"ELSIF", TokenKind::KwElsif},
        {"ELSE", TokenKind::KwElse},
        {"SELECT", TokenKind::KwSelect},
        {"WHEN", TokenKind::KwWhen},
        {"CHOICE", TokenKind::KwChoice},
        {"OR", TokenKind::KwOr},
        {"ANY", TokenKind::KwAny},
        {"WHERE", TokenKind::KwWhere},
        {"MACHINE", TokenKind::KwMachine},
        {"SETS", TokenKind::KwSets},
        {"CONSTANTS", TokenKind::KwConstants},
        {"PROPERTIES", TokenKind::KwProperties},
        {"VARIABLES", TokenKind::KwVariables},
        {"INVARIANT", TokenKind::KwInvariant},
        {"ASSERTIONS", TokenKind::KwAssertions},
        {"DEFINITIONS", TokenKind::KwDefinitions},
        {"INITIALISATION", TokenKind::KwInitialisation},
        {"OPERATIONS", TokenKind::KwOperations},
    };
    return table;
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        for (;;) {
            skip_trivia();
            if (eof()) break;
            tokens.push_back(next_token());
        }
        Token end;
        end.kind = TokenKind::EndOfInput;
        end.span = here(0);
        tokens.push_back(end);
        return tokens;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool eof() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    SourceSpan here(int width) const {
        SourceSpan s;
        s.start_line = s.end_line = line_;
        s.start_col = col_;
        s.end_col = col_ + (width > 0 ? width - 1 : 0);
        return s;
    }

    void skip_trivia() {
        for (;;) {
            while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
            if (peek() == '/' && peek(1) == '*') {
                SourceSpan open = here(2);
                advance();
                advance();
                while (!(peek() == '*' && peek(1) == '/')) {
                    if (eof()) throw LexError(open, "unterminated comment");
                    advance();
                }
                advance();
                advance();
                continue;
            }
            if (peek() == '/' && peek(1) == '/') {
                while (!eof() && peek() != '\n') advance();
                continue;
            }
            break;
        }
    }

    Token make(TokenKind kind, int width) {
        Token t;
        t.kind = kind;
        t.span = here(width);
        t.text = std::string(src_.substr(pos_, width));
        for (int i = 0; i < width; ++i) advance();
        return t;
    }

    Token next_token() {
        char c = peek();

        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t n = 1;
            while (std::isdigit(static_cast<unsigned char>(peek(n)))) ++n;
            return make(TokenKind::Integer, static_cast<int>(n));
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t n = 1;
            while (std::isalnum(static_cast<unsigned char>(peek(n))) || peek(n) == '_') ++n;
            std::string word(src_.substr(pos_, n));
            auto it = keyword_table().find(word);
            if (it != keyword_table().end()) return make(it->second, static_cast<int>(n));
            return make(TokenKind::Identifier, static_cast<int>(n));
        }

        if (c == '"') {
            std::size_t n = 1;
            while (peek(n) != '"') {
                if (pos_ + n >= src_.size() || peek(n) == '\n')
                    throw LexError(here(1), "unterminated string literal");
                ++n;
            }
            Token t = make(TokenKind::String, static_cast<int>(n + 1));
            t.text = t.text.substr(1, t.text.size() - 2);
            return t;
        }

        auto two = [&](char a, char b) { return c == a && peek(1) == b; };

        switch (c) {
        case '(': return make(TokenKind::LParen, 1);
        case ')': return make(TokenKind::RParen, 1);
        case '{': return make(TokenKind::LBrace, 1);
        case '}': return make(TokenKind::RBrace, 1);
        case '[': return make(TokenKind::LBracket, 1);
        case ']': return make(TokenKind::RBracket, 1);
        case ',': return make(TokenKind::Comma, 1);
        case ';': return make(TokenKind::Semicolon, 1);
        case '&': return make(TokenKind::Ampersand, 1);
        case '~': return make(TokenKind::Tilde, 1);
        case '^': return make(TokenKind::Caret, 1);
        case '%': return make(TokenKind::Percent, 1);
        case '.':
            if (peek(1) == '.') return make(TokenKind::DotDot, 2);
            return make(TokenKind::Dot, 1);
        case '!': return make(TokenKind::Bang, 1);
        case '#': {
            // '#PREDICATE' is a marker only when not an exists binder
            static const std::string_view marker = "PREDICATE";
            if (src_.substr(pos_ + 1, marker.size()) == marker) {
                char after = peek(1 + marker.size());
                bool word_continues = std::isalnum(static_cast<unsigned char>(after)) || after == '_';
                if (!word_continues && after != '.' && after != ',')
                    return make(TokenKind::PredicateMarker, 1 + static_cast<int>(marker.size()));
            }
            return make(TokenKind::Hash, 1);
        }
        case '=':
            if (two('=', '>')) return make(TokenKind::Implies, 2);
            if (two('=', '=')) return make(TokenKind::DefEq, 2);
            return make(TokenKind::Equal, 1);
        case '+':
            if (c == '+' && peek(1) == '-' && peek(2) == '>') {
                if (peek(3) == '>') return make(TokenKind::PartialSurj, 4);
                return make(TokenKind::PartialFn, 3);
            }
            return make(TokenKind::Plus, 1);
        case '-':
            if (peek(1) == '-' && peek(2) == '>') {
                if (peek(3) == '>') return make(TokenKind::TotalSurj, 4);
                return make(TokenKind::TotalFn, 3);
            }
            return make(TokenKind::Minus, 1);
        case '*':
            if (peek(1) == '*') return make(TokenKind::StarStar, 2);
            return make(TokenKind::Star, 1);
        case '/':
            if (two('/', '\\')) return make(TokenKind::SetInter, 2);
            if (two('/', '=')) return make(TokenKind::NotEqual, 2);
            if (two('/', ':')) return make(TokenKind::NotColon, 2);
            return make(TokenKind::Slash, 1);
        case '\\':
            if (two('\\', '/')) return make(TokenKind::SetUnion, 2);
            throw LexError(here(1), "illegal character '\\'");
        case ':':
            if (two(':', '=')) return make(TokenKind::Assign, 2);
            if (two(':', ':')) return make(TokenKind::DoubleColon, 2);
            return make(TokenKind::Colon, 1);
        case '<':
            if (peek(1) == '=' && peek(2) == '>') return make(TokenKind::Equivalence, 3);
            if (peek(1) == '-' && peek(2) == '>') return make(TokenKind::Relation, 3);
            if (peek(1) == '<' && peek(2) == ':') return make(TokenKind::StrictSubsetOf, 3);
            if (peek(1) == '<' && peek(2) == '|') return make(TokenKind::DomSubtract, 3);
            if (two('<', '=')) return make(TokenKind::LessEqual, 2);
            if (two('<', ':')) return make(TokenKind::SubsetOf, 2);
            if (two('<', '+')) return make(TokenKind::Override, 2);
            if (two('<', '|')) return make(TokenKind::DomRestrict, 2);
            if (two('<', '>')) return make(TokenKind::EmptySeq, 2);
            return make(TokenKind::Less, 1);
        case '>':
            if (peek(1) == '-' && peek(2) == '>') {
                if (peek(3) == '>') return make(TokenKind::TotalBij, 4);
                return make(TokenKind::TotalInj, 3);
            }
            if (peek(1) == '+' && peek(2) == '>') return make(TokenKind::PartialInj, 3);
            if (two('>', '=')) return make(TokenKind::GreaterEqual, 2);
            return make(TokenKind::Greater, 1);
        case '|':
            if (peek(1) == '-' && peek(2) == '>') return make(TokenKind::Maplet, 3);
            if (peek(1) == '>' && peek(2) == '>') return make(TokenKind::RanSubtract, 3);
            if (two('|', '>')) return make(TokenKind::RanRestrict, 2);
            if (two('|', '|')) return make(TokenKind::DoubleBar, 2);
            return make(TokenKind::VerticalBar, 1);
        default:
            throw LexError(here(1), std::string("illegal character '") + c + "'");
        }
    }
};

} // namespace

std::vector<Token> tokenize(std::string_view source) {
    return Lexer(source).run();
}

} // namespace bcheck
