#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <array>

namespace fw::alg {

enum class Parity : std::uint8_t { even, odd };

using SymbolId = std::uint16_t;

/// An atomic generator of the operator algebra.
struct OperatorSymbol {
    std::string name;
    Parity parity = Parity::even;
    int weight_vc = 0;  // power of v/c carried under the velocity scheme
    bool hermitian = true;
};

/// Process-wide table of operator symbols.
///
/// Ids are dense and stable. The four built-ins are always present at fixed
/// ids; user symbols may be declared at any time from any thread. Attributes
/// never change after declaration.
class SymbolRegistry {
public:
    static constexpr std::size_t capacity = 256;

    static SymbolRegistry& global();

    /// Returns the id of `name`, declaring it if needed. Throws
    /// std::invalid_argument if the name exists with different attributes.
    SymbolId declare(std::string_view name, Parity parity, int weight_vc);
    std::optional<SymbolId> find(std::string_view name) const;

    const OperatorSymbol& at(SymbolId id) const;
    std::size_t size() const noexcept { return count_.load(std::memory_order_acquire); }

private:
    SymbolRegistry();

    std::array<OperatorSymbol, capacity> table_;
    std::atomic<std::size_t> count_{0};
    mutable std::mutex mutex_;
};

namespace sym {
inline constexpr SymbolId beta = 0;
inline constexpr SymbolId O = 1;  // odd part of the Hamiltonian
inline constexpr SymbolId F = 2;  // E - i hbar d/dt, treated as one even symbol
inline constexpr SymbolId E = 3;  // even potential part
}  // namespace sym

inline const OperatorSymbol& symbol_info(SymbolId id)
{
    return SymbolRegistry::global().at(id);
}

inline bool is_odd(SymbolId id)
{
    return symbol_info(id).parity == Parity::odd;
}

}  // namespace fw::alg
