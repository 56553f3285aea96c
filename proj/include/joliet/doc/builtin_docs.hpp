#pragma once

#include <string_view>

namespace joliet::doc {

/// Starter categorization file compiled into the tool. These bodies are
/// project documentation written for this tool, not upstream Jolie docs.
inline constexpr std::string_view kBuiltinDocsJson = R"json({
  "protocols": {
    "sodep": "**sodep** is the binary protocol native to Jolie services.\n\nIt serializes the whole value tree of a message, subnodes included, so both ends must be Jolie (or speak sodep).\n\n- compact binary encoding\n- preserves tree structure and cardinality\n- typical location: `socket://host:port`\n\nProject documentation shipped with joliet.",
    "http": "**http** sends messages as HTTP requests and responses.\n\nThe value tree is mapped onto the request body and query, and the operation name onto the request path.\n\n- interoperates with web clients and browsers\n- location form: `socket://host:port`\n- see [HTTP/1.1](https://www.rfc-editor.org/rfc/rfc9112)\n\nProject documentation shipped with joliet.",
    "https": "**https** is `http` over a TLS channel.\n\nSame message mapping as `http`; the connection is encrypted and the server is authenticated by certificate.\n\n- location form: `socket://host:443`\n\nProject documentation shipped with joliet.",
    "soap": "**soap** wraps messages in SOAP envelopes over HTTP.\n\nOperations map to SOAP actions and the value tree to the XML body, which lets a service talk to WSDL-described web services.\n\n- XML payloads\n- see [SOAP 1.1](https://www.w3.org/TR/2000/NOTE-SOAP-20000508/)\n\nProject documentation shipped with joliet.",
    "xmlrpc": "**xmlrpc** encodes calls as XML-RPC method invocations over HTTP.\n\nEach operation becomes a method name; request values become the parameter list.\n\n- simple XML encoding\n- no subnode attributes\n\nProject documentation shipped with joliet."
  },
  "interfaces": {}
})json";

}  // namespace joliet::doc
