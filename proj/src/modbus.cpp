#include "nilmlab/modbus.hpp"

#include <cstring>
#include <stdexcept>

namespace nilm::modbus {

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v & 0xFF));
}

uint16_t get_u16(std::span<const uint8_t> b, size_t i) {
    return static_cast<uint16_t>((b[i] << 8) | b[i + 1]);
}

constexpr size_t kMbapSize = 7;

}  // namespace

const char* to_string(DecodeError e) {
    switch (e) {
        case DecodeError::short_frame: return "short frame";
        case DecodeError::bad_protocol_id: return "bad protocol id";
        case DecodeError::length_mismatch: return "length mismatch";
        case DecodeError::unknown_function: return "unknown function";
        case DecodeError::bad_quantity: return "bad quantity";
        case DecodeError::bad_byte_count: return "bad byte count";
    }
    return "unknown error";
}

std::vector<uint8_t> encode_frame(const MbapHeader& header, const Pdu& pdu) {
    std::vector<uint8_t> body;  // PDU bytes
    if (const auto* req = std::get_if<ReadRequest>(&pdu)) {
        if (req->function != kFcReadHolding && req->function != kFcReadInput)
            throw std::invalid_argument("encode: unsupported request function code");
        if (req->quantity < 1 || req->quantity > kMaxReadQuantity)
            throw std::invalid_argument("encode: read quantity out of range 1..125");
        body.push_back(req->function);
        put_u16(body, req->start_address);
        put_u16(body, req->quantity);
    } else if (const auto* resp = std::get_if<ReadResponse>(&pdu)) {
        if (resp->function != kFcReadHolding && resp->function != kFcReadInput)
            throw std::invalid_argument("encode: unsupported response function code");
        if (resp->registers.empty() || resp->registers.size() > kMaxReadQuantity)
            throw std::invalid_argument("encode: response register count out of range 1..125");
        body.push_back(resp->function);
        body.push_back(static_cast<uint8_t>(resp->registers.size() * 2));
        for (uint16_t r : resp->registers) put_u16(body, r);
    } else {
        const auto& exc = std::get<ExceptionResponse>(pdu);
        if ((exc.function & kExceptionFlag) == 0)
            throw std::invalid_argument("encode: exception function code must have 0x80 set");
        body.push_back(exc.function);
        body.push_back(exc.code);
    }

    std::vector<uint8_t> out;
    out.reserve(kMbapSize + body.size());
    put_u16(out, header.transaction_id);
    put_u16(out, 0);  // protocol id
    put_u16(out, static_cast<uint16_t>(1 + body.size()));
    out.push_back(header.unit_id);
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

DecodeResult decode_frame(std::span<const uint8_t> bytes) {
    // Minimal well-formed frame: MBAP + function + 1 byte (exception).
    if (bytes.size() < kMbapSize + 2) return DecodeFailure{DecodeError::short_frame};

    MbapHeader h;
    h.transaction_id = get_u16(bytes, 0);
    h.protocol_id = get_u16(bytes, 2);
    h.length = get_u16(bytes, 4);
    h.unit_id = bytes[6];

    if (h.protocol_id != 0) return DecodeFailure{DecodeError::bad_protocol_id};
    if (static_cast<size_t>(h.length) + 6 != bytes.size())
        return DecodeFailure{DecodeError::length_mismatch};

    const uint8_t fc = bytes[7];
    const std::span<const uint8_t> payload = bytes.subspan(8);

    if (fc == kFcReadHolding || fc == kFcReadInput) {
        // Request (4 payload bytes) and response (1 + even byte count) have
        // disjoint payload sizes, so the direction is unambiguous.
        if (payload.size() == 4) {
            ReadRequest req;
            req.function = fc;
            req.start_address = get_u16(payload, 0);
            req.quantity = get_u16(payload, 2);
            if (req.quantity < 1 || req.quantity > kMaxReadQuantity)
                return DecodeFailure{DecodeError::bad_quantity, fc};
            return Frame{h, req};
        }
        if (!payload.empty() && payload.size() == 1 + static_cast<size_t>(payload[0]) &&
            payload[0] % 2 == 0 && payload[0] >= 2) {
            ReadResponse resp;
            resp.function = fc;
            resp.registers.reserve(payload[0] / 2);
            for (size_t i = 1; i + 1 < payload.size(); i += 2)
                resp.registers.push_back(get_u16(payload, i));
            return Frame{h, resp};
        }
        return DecodeFailure{DecodeError::bad_byte_count, fc};
    }

    if (fc & kExceptionFlag) {
        const uint8_t base = fc & ~kExceptionFlag;
        if (base != kFcReadHolding && base != kFcReadInput)
            return DecodeFailure{DecodeError::unknown_function, fc};
        if (payload.size() != 1) return DecodeFailure{DecodeError::bad_byte_count, fc};
        return Frame{h, ExceptionResponse{fc, payload[0]}};
    }

    return DecodeFailure{DecodeError::unknown_function, fc};
}

RegisterMap RegisterMap::standard() {
    RegisterMap m;
    m.entries_ = {
        {0x0000, Field::active_power}, {0x0002, Field::reactive_power},
        {0x0004, Field::voltage},      {0x0006, Field::current},
        {0x0008, Field::energy},       {0x000A, Field::sim_time},
    };
    return m;
}

bool RegisterMap::covers(uint16_t start, uint16_t quantity) const {
    if (quantity == 0) return false;
    const uint32_t end = static_cast<uint32_t>(start) + quantity;
    return end <= register_count();
}

std::vector<uint16_t> RegisterMap::encode(const PowerSample& sample) const {
    std::vector<uint16_t> regs(register_count(), 0);
    for (const MapEntry& e : entries_) {
        float v = 0.0f;
        switch (e.field) {
            case Field::active_power: v = sample.active_w; break;
            case Field::reactive_power: v = sample.reactive_var; break;
            case Field::voltage: v = sample.voltage_v; break;
            case Field::current: v = sample.current_a; break;
            case Field::energy: v = sample.energy_wh; break;
            case Field::sim_time: v = static_cast<float>(sample.t_ms / 1000.0); break;
        }
        const auto [hi, lo] = float_to_registers(v);
        regs[e.address] = hi;
        regs[e.address + 1] = lo;
    }
    return regs;
}

PowerSample RegisterMap::decode(std::span<const uint16_t> registers) const {
    if (registers.size() != register_count())
        throw std::invalid_argument("register image size mismatch");
    PowerSample s;
    for (const MapEntry& e : entries_) {
        const float v = registers_to_float(registers[e.address], registers[e.address + 1]);
        switch (e.field) {
            case Field::active_power: s.active_w = v; break;
            case Field::reactive_power: s.reactive_var = v; break;
            case Field::voltage: s.voltage_v = v; break;
            case Field::current: s.current_a = v; break;
            case Field::energy: s.energy_wh = v; break;
            case Field::sim_time: s.t_ms = static_cast<int64_t>(std::llround(static_cast<double>(v) * 1000.0)); break;
        }
    }
    return s;
}

std::pair<uint16_t, uint16_t> float_to_registers(float value) {
    uint32_t bits;
    std::memcpy(&bits, &value, sizeof(bits));
    return {static_cast<uint16_t>(bits >> 16), static_cast<uint16_t>(bits & 0xFFFF)};
}

float registers_to_float(uint16_t hi, uint16_t lo) {
    const uint32_t bits = (static_cast<uint32_t>(hi) << 16) | lo;
    float value;
    std::memcpy(&value, &bits, sizeof(value));
    return value;
}

}  // namespace nilm::modbus
