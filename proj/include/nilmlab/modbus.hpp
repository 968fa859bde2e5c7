#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "nilmlab/sample.hpp"

namespace nilm::modbus {

inline constexpr uint8_t kFcReadHolding = 0x03;
inline constexpr uint8_t kFcReadInput = 0x04;
inline constexpr uint8_t kExceptionFlag = 0x80;
inline constexpr uint16_t kMaxReadQuantity = 125;

enum class ExceptionCode : uint8_t {
    illegal_function = 0x01,
    illegal_data_address = 0x02,
    illegal_data_value = 0x03,
    server_failure = 0x04,
};

// 7-byte Modbus TCP prefix. length counts unit id + PDU and is recomputed on
// encode; protocol id is 0 on the wire.
struct MbapHeader {
    uint16_t transaction_id = 0;
    uint16_t protocol_id = 0;
    uint16_t length = 0;
    uint8_t unit_id = 0;

    friend bool operator==(const MbapHeader&, const MbapHeader&) = default;
};

struct ReadRequest {
    uint8_t function = kFcReadHolding;
    uint16_t start_address = 0;
    uint16_t quantity = 0;

    friend bool operator==(const ReadRequest&, const ReadRequest&) = default;
};

struct ReadResponse {
    uint8_t function = kFcReadHolding;
    std::vector<uint16_t> registers;

    friend bool operator==(const ReadResponse&, const ReadResponse&) = default;
};

// function carries the original code with 0x80 set (0x83/0x84).
struct ExceptionResponse {
    uint8_t function = 0x83;
    uint8_t code = 0;

    friend bool operator==(const ExceptionResponse&, const ExceptionResponse&) = default;
};

using Pdu = std::variant<ReadRequest, ReadResponse, ExceptionResponse>;

struct Frame {
    MbapHeader header;
    Pdu pdu;
};

enum class DecodeError {
    short_frame,       // fewer bytes than MBAP + minimal PDU
    bad_protocol_id,   // protocol id != 0
    length_mismatch,   // MBAP length disagrees with the byte count
    unknown_function,  // function code outside the supported set
    bad_quantity,      // request quantity outside 1..125
    bad_byte_count,    // response byte count odd or inconsistent
};

const char* to_string(DecodeError);

struct DecodeFailure {
    DecodeError error;
    // Function code seen on the wire when the header was parseable (lets a
    // server answer an exception for an unknown function). 0 if unavailable.
    uint8_t function = 0;

    friend bool operator==(const DecodeFailure&, const DecodeFailure&) = default;
};

using DecodeResult = std::variant<Frame, DecodeFailure>;

// Throws std::invalid_argument when the PDU violates its invariants
// (quantity out of range, register count out of range).
std::vector<uint8_t> encode_frame(const MbapHeader& header, const Pdu& pdu);

// Total over arbitrary input; never throws.
DecodeResult decode_frame(std::span<const uint8_t> bytes);

// ---------------------------------------------------------------------------
// Register map: address -> measured quantity, each value an IEEE-754 binary32
// split across two consecutive registers, high word first.

enum class Field {
    active_power,
    reactive_power,
    voltage,
    current,
    energy,
    sim_time,  // meter-simulated seconds; lets the master timestamp samples
};

struct MapEntry {
    uint16_t address;
    Field field;
};

class RegisterMap {
public:
    // 0x0000 active W, 0x0002 reactive var, 0x0004 voltage V, 0x0006 current A,
    // 0x0008 energy Wh, 0x000A simulated time s.
    static RegisterMap standard();

    uint16_t register_count() const { return static_cast<uint16_t>(entries_.size() * 2); }
    bool covers(uint16_t start, uint16_t quantity) const;
    const std::vector<MapEntry>& entries() const { return entries_; }

    // Full register image of one sample.
    std::vector<uint16_t> encode(const PowerSample& sample) const;
    // Inverse; expects exactly register_count() registers.
    // Throws std::invalid_argument on size mismatch.
    PowerSample decode(std::span<const uint16_t> registers) const;

private:
    std::vector<MapEntry> entries_;
};

std::pair<uint16_t, uint16_t> float_to_registers(float value);
float registers_to_float(uint16_t hi, uint16_t lo);

}  // namespace nilm::modbus
