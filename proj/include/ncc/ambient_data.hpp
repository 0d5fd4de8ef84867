#pragma once

#include <string_view>

// Copy of data/node-ambient.json; tests/test_ambient.cpp checks they match.
namespace ncc {

inline constexpr std::string_view kAmbientJson = R"ambient({
 "version": 1,
 "globals": {
  "AbortController": {
   "class": true,
   "params": []
  },
  "AbortSignal": {
   "class": true,
   "params": []
  },
  "AggregateError": {
   "class": true,
   "params": []
  },
  "Array": {
   "class": true,
   "params": []
  },
  "ArrayBuffer": {
   "class": true,
   "params": []
  },
  "Atomics": {
   "type_name": "Atomics",
   "closed": false,
   "members": {
    "add": {
     "params": []
    },
    "and": {
     "params": []
    },
    "compareExchange": {
     "params": []
    },
    "exchange": {
     "params": []
    },
    "isLockFree": {
     "params": []
    },
    "load": {
     "params": []
    },
    "notify": {
     "params": []
    },
    "or": {
     "params": []
    },
    "store": {
     "params": []
    },
    "sub": {
     "params": []
    },
    "wait": {
     "params": []
    },
    "waitAsync": {
     "params": []
    },
    "xor": {
     "params": []
    }
   }
  },
  "BigInt": {
   "params": [
    "string | number | bigint | boolean"
   ]
  },
  "BigInt64Array": {
   "class": true,
   "params": []
  },
  "BigUint64Array": {
   "class": true,
   "params": []
  },
  "Blob": {
   "class": true,
   "params": []
  },
  "Boolean": {
   "class": true,
   "params": []
  },
  "BroadcastChannel": {
   "class": true,
   "params": []
  },
  "Buffer": {
   "type_name": "Buffer",
   "closed": false,
   "members": {}
  },
  "CompressionStream": {
   "class": true,
   "params": []
  },
  "CustomEvent": {
   "class": true,
   "params": []
  },
  "DOMException": {
   "class": true,
   "params": []
  },
  "DataView": {
   "class": true,
   "params": []
  },
  "Date": {
   "class": true,
   "params": []
  },
  "DecompressionStream": {
   "class": true,
   "params": []
  },
  "Error": {
   "class": true,
   "params": []
  },
  "EvalError": {
   "class": true,
   "params": []
  },
  "Event": {
   "class": true,
   "params": []
  },
  "EventTarget": {
   "class": true,
   "params": []
  },
  "File": {
   "class": true,
   "params": []
  },
  "FinalizationRegistry": {
   "class": true,
   "params": []
  },
  "Float32Array": {
   "class": true,
   "params": []
  },
  "Float64Array": {
   "class": true,
   "params": []
  },
  "FormData": {
   "class": true,
   "params": []
  },
  "Function": {
   "class": true,
   "params": []
  },
  "Headers": {
   "class": true,
   "params": []
  },
  "Infinity": {
   "value": "any"
  },
  "Int16Array": {
   "class": true,
   "params": []
  },
  "Int32Array": {
   "class": true,
   "params": []
  },
  "Int8Array": {
   "class": true,
   "params": []
  },
  "Intl": {
   "type_name": "typeof Intl",
   "closed": false,
   "members": {}
  },
  "JSON": {
   "type_name": "JSON",
   "closed": true,
   "members": {
    "parse": {
     "params": [
      "string",
      "function"
     ]
    },
    "stringify": {
     "params": [
      "any",
      "function | null",
      "string | number"
     ]
    }
   }
  },
  "Map": {
   "class": true,
   "params": []
  },
  "Math": {
   "type_name": "Math",
   "closed": true,
   "members": {
    "abs": {
     "params": [
      "number"
     ]
    },
    "acos": {
     "params": [
      "number"
     ]
    },
    "acosh": {
     "params": [
      "number"
     ]
    },
    "asin": {
     "params": [
      "number"
     ]
    },
    "asinh": {
     "params": [
      "number"
     ]
    },
    "atan": {
     "params": [
      "number"
     ]
    },
    "atanh": {
     "params": [
      "number"
     ]
    },
    "cbrt": {
     "params": [
      "number"
     ]
    },
    "ceil": {
     "params": [
      "number"
     ]
    },
    "clz32": {
     "params": [
      "number"
     ]
    },
    "cos": {
     "params": [
      "number"
     ]
    },
    "cosh": {
     "params": [
      "number"
     ]
    },
    "exp": {
     "params": [
      "number"
     ]
    },
    "expm1": {
     "params": [
      "number"
     ]
    },
    "floor": {
     "params": [
      "number"
     ]
    },
    "fround": {
     "params": [
      "number"
     ]
    },
    "log": {
     "params": [
      "number"
     ]
    },
    "log10": {
     "params": [
      "number"
     ]
    },
    "log1p": {
     "params": [
      "number"
     ]
    },
    "log2": {
     "params": [
      "number"
     ]
    },
    "round": {
     "params": [
      "number"
     ]
    },
    "sign": {
     "params": [
      "number"
     ]
    },
    "sin": {
     "params": [
      "number"
     ]
    },
    "sinh": {
     "params": [
      "number"
     ]
    },
    "sqrt": {
     "params": [
      "number"
     ]
    },
    "tan": {
     "params": [
      "number"
     ]
    },
    "tanh": {
     "params": [
      "number"
     ]
    },
    "trunc": {
     "params": [
      "number"
     ]
    },
    "atan2": {
     "params": [
      "number",
      "number"
     ]
    },
    "imul": {
     "params": [
      "number",
      "number"
     ]
    },
    "pow": {
     "params": [
      "number",
      "number"
     ]
    },
    "max": {
     "params": [
      "...number"
     ]
    },
    "min": {
     "params": [
      "...number"
     ]
    },
    "hypot": {
     "params": [
      "...number"
     ]
    },
    "random": {
     "params": []
    },
    "E": {
     "value": "number"
    },
    "LN10": {
     "value": "number"
    },
    "LN2": {
     "value": "number"
    },
    "LOG10E": {
     "value": "number"
    },
    "LOG2E": {
     "value": "number"
    },
    "PI": {
     "value": "number"
    },
    "SQRT1_2": {
     "value": "number"
    },
    "SQRT2": {
     "value": "number"
    }
   }
  },
  "MessageChannel": {
   "class": true,
   "params": []
  },
  "MessageEvent": {
   "class": true,
   "params": []
  },
  "MessagePort": {
   "class": true,
   "params": []
  },
  "NaN": {
   "value": "any"
  },
  "Number": {
   "class": true,
   "params": []
  },
  "Object": {
   "class": true,
   "params": []
  },
  "Performance": {
   "class": true,
   "params": []
  },
  "PerformanceObserver": {
   "class": true,
   "params": []
  },
  "Promise": {
   "class": true,
   "params": []
  },
  "Proxy": {
   "class": true,
   "params": []
  },
  "RangeError": {
   "class": true,
   "params": []
  },
  "ReadableStream": {
   "class": true,
   "params": []
  },
  "ReferenceError": {
   "class": true,
   "params": []
  },
  "Reflect": {
   "type_name": "typeof Reflect",
   "closed": true,
   "members": {
    "apply": {
     "params": []
    },
    "construct": {
     "params": []
    },
    "defineProperty": {
     "params": []
    },
    "deleteProperty": {
     "params": []
    },
    "get": {
     "params": []
    },
    "getOwnPropertyDescriptor": {
     "params": []
    },
    "getPrototypeOf": {
     "params": []
    },
    "has": {
     "params": []
    },
    "isExtensible": {
     "params": []
    },
    "ownKeys": {
     "params": []
    },
    "preventExtensions": {
     "params": []
    },
    "set": {
     "params": []
    },
    "setPrototypeOf": {
     "params": []
    }
   }
  },
  "RegExp": {
   "class": true,
   "params": []
  },
  "Request": {
   "class": true,
   "params": []
  },
  "Response": {
   "class": true,
   "params": []
  },
  "Set": {
   "class": true,
   "params": []
  },
  "SharedArrayBuffer": {
   "class": true,
   "params": []
  },
  "String": {
   "class": true,
   "params": []
  },
  "Symbol": {
   "params": [
    "string | number"
   ]
  },
  "SyntaxError": {
   "class": true,
   "params": []
  },
  "TextDecoder": {
   "class": true,
   "params": []
  },
  "TextEncoder": {
   "class": true,
   "params": []
  },
  "TransformStream": {
   "class": true,
   "params": []
  },
  "TypeError": {
   "class": true,
   "params": []
  },
  "URIError": {
   "class": true,
   "params": []
  },
  "URL": {
   "class": true,
   "params": []
  },
  "URLSearchParams": {
   "class": true,
   "params": []
  },
  "Uint16Array": {
   "class": true,
   "params": []
  },
  "Uint32Array": {
   "class": true,
   "params": []
  },
  "Uint8Array": {
   "class": true,
   "params": []
  },
  "Uint8ClampedArray": {
   "class": true,
   "params": []
  },
  "WeakMap": {
   "class": true,
   "params": []
  },
  "WeakRef": {
   "class": true,
   "params": []
  },
  "WeakSet": {
   "class": true,
   "params": []
  },
  "WebSocket": {
   "class": true,
   "params": []
  },
  "WritableStream": {
   "class": true,
   "params": []
  },
  "__dirname": {
   "value": "string"
  },
  "__filename": {
   "value": "string"
  },
  "atob": {
   "params": [
    "string"
   ]
  },
  "btoa": {
   "params": [
    "string"
   ]
  },
  "clearImmediate": {
   "params": [
    "any"
   ]
  },
  "clearInterval": {
   "params": [
    "any"
   ]
  },
  "clearTimeout": {
   "params": [
    "any"
   ]
  },
  "console": {
   "type_name": "Console",
   "closed": true,
   "members": {
    "log": {
     "params": [
      "...any"
     ]
    },
    "info": {
     "params": [
      "...any"
     ]
    },
    "warn": {
     "params": [
      "...any"
     ]
    },
    "error": {
     "params": [
      "...any"
     ]
    },
    "debug": {
     "params": [
      "...any"
     ]
    },
    "trace": {
     "params": [
      "...any"
     ]
    },
    "dir": {
     "params": [
      "...any"
     ]
    },
    "dirxml": {
     "params": [
      "...any"
     ]
    },
    "table": {
     "params": [
      "...any"
     ]
    },
    "assert": {
     "params": [
      "...any"
     ]
    },
    "count": {
     "params": [
      "...any"
     ]
    },
    "countReset": {
     "params": [
      "...any"
     ]
    },
    "group": {
     "params": [
      "...any"
     ]
    },
    "groupCollapsed": {
     "params": [
      "...any"
     ]
    },
    "groupEnd": {
     "params": [
      "...any"
     ]
    },
    "time": {
     "params": [
      "...any"
     ]
    },
    "timeEnd": {
     "params": [
      "...any"
     ]
    },
    "timeLog": {
     "params": [
      "...any"
     ]
    },
    "clear": {
     "params": [
      "...any"
     ]
    },
    "profile": {
     "params": [
      "...any"
     ]
    },
    "profileEnd": {
     "params": [
      "...any"
     ]
    },
    "timeStamp": {
     "params": [
      "...any"
     ]
    },
    "Console": {
     "class": true,
     "params": [
      "NodeJS.WritableStream"
     ]
    }
   }
  },
  "crypto": {
   "type_name": "crypto",
   "closed": false,
   "members": {}
  },
  "decodeURI": {
   "params": [
    "string"
   ]
  },
  "decodeURIComponent": {
   "params": [
    "string"
   ]
  },
  "encodeURI": {
   "params": [
    "string"
   ]
  },
  "encodeURIComponent": {
   "params": [
    "string | number | boolean"
   ]
  },
  "escape": {
   "params": [
    "string"
   ]
  },
  "eval": {
   "params": [
    "string"
   ]
  },
  "exports": {
   "type_name": "exports",
   "closed": false,
   "members": {}
  },
  "fetch": {
   "params": [
    "string | URL | Request",
    "RequestInit"
   ]
  },
  "global": {
   "type_name": "global",
   "closed": false,
   "members": {}
  },
  "globalThis": {
   "type_name": "globalThis",
   "closed": false,
   "members": {}
  },
  "isFinite": {
   "params": [
    "number"
   ]
  },
  "isNaN": {
   "params": [
    "number"
   ]
  },
  "module": {
   "type_name": "module",
   "closed": false,
   "members": {}
  },
  "navigator": {
   "type_name": "navigator",
   "closed": false,
   "members": {}
  },
  "parseFloat": {
   "params": [
    "string"
   ]
  },
  "parseInt": {
   "params": [
    "string",
    "number"
   ]
  },
  "performance": {
   "type_name": "performance",
   "closed": false,
   "members": {}
  },
  "process": {
   "type_name": "process",
   "closed": false,
   "members": {}
  },
  "queueMicrotask": {
   "params": [
    "function"
   ]
  },
  "require": {
   "params": [
    "string"
   ]
  },
  "setImmediate": {
   "params": [
    "function",
    "...any"
   ]
  },
  "setInterval": {
   "params": [
    "function",
    "number",
    "...any"
   ]
  },
  "setTimeout": {
   "params": [
    "function",
    "number",
    "...any"
   ]
  },
  "structuredClone": {
   "params": [
    "any",
    "object"
   ]
  },
  "undefined": {
   "value": "any"
  },
  "unescape": {
   "params": [
    "string"
   ]
  }
 },
 "modules": {
  "assert": {
   "members": {
    "AssertionError": {
     "class": true,
     "params": [
      "object"
     ]
    },
    "deepEqual": {
     "params": [
      "any",
      "...any"
     ]
    },
    "deepStrictEqual": {
     "params": [
      "any",
      "...any"
     ]
    },
    "doesNotMatch": {
     "params": [
      "any",
      "...any"
     ]
    },
    "doesNotReject": {
     "params": [
      "any",
      "...any"
     ]
    },
    "doesNotThrow": {
     "params": [
      "any",
      "...any"
     ]
    },
    "equal": {
     "params": [
      "any",
      "...any"
     ]
    },
    "fail": {
     "params": [
      "any",
      "...any"
     ]
    },
    "ifError": {
     "params": [
      "any",
      "...any"
     ]
    },
    "match": {
     "params": [
      "any",
      "...any"
     ]
    },
    "notDeepEqual": {
     "params": [
      "any",
      "...any"
     ]
    },
    "notDeepStrictEqual": {
     "params": [
      "any",
      "...any"
     ]
    },
    "notEqual": {
     "params": [
      "any",
      "...any"
     ]
    },
    "notStrictEqual": {
     "params": [
      "any",
      "...any"
     ]
    },
    "ok": {
     "params": [
      "any",
      "...any"
     ]
    },
    "rejects": {
     "params": [
      "any",
      "...any"
     ]
    },
    "strict": {
     "value": "object"
    },
    "strictEqual": {
     "params": [
      "any",
      "...any"
     ]
    },
    "throws": {
     "params": [
      "any",
      "...any"
     ]
    }
   }
  },
  "async_hooks": {
   "members": {
    "AsyncLocalStorage": {
     "class": true,
     "params": []
    },
    "AsyncResource": {
     "class": true,
     "params": [
      "string"
     ]
    },
    "createHook": {
     "params": [
      "HookCallbacks"
     ]
    },
    "executionAsyncId": {
     "params": []
    },
    "executionAsyncResource": {
     "params": []
    },
    "triggerAsyncId": {
     "params": []
    }
   }
  },
  "buffer": {
   "members": {
    "Blob": {
     "class": true,
     "params": [
      "any[]"
     ]
    },
    "Buffer": {
     "value": "BufferConstructor"
    },
    "File": {
     "class": true,
     "params": [
      "any[]",
      "string"
     ]
    },
    "INSPECT_MAX_BYTES": {
     "value": "number"
    },
    "atob": {
     "params": [
      "string"
     ]
    },
    "btoa": {
     "params": [
      "string"
     ]
    },
    "constants": {
     "value": "object"
    },
    "isAscii": {
     "params": [
      "TypedArray"
     ]
    },
    "isUtf8": {
     "params": [
      "TypedArray"
     ]
    },
    "kMaxLength": {
     "value": "number"
    },
    "resolveObjectURL": {
     "params": [
      "string"
     ]
    },
    "transcode": {
     "params": [
      "Uint8Array",
      "string",
      "string"
     ]
    }
   }
  },
  "child_process": {
   "members": {
    "ChildProcess": {
     "class": true,
     "params": []
    },
    "exec": {
     "params": [
      "string",
      "...any"
     ]
    },
    "execFile": {
     "params": [
      "string",
      "...any"
     ]
    },
    "execFileSync": {
     "params": [
      "string",
      "...any"
     ]
    },
    "execSync": {
     "params": [
      "string",
      "object"
     ]
    },
    "fork": {
     "params": [
      "string",
      "string[]",
      "object"
     ]
    },
    "spawn": {
     "params": [
      "string",
      "string[]",
      "object"
     ]
    },
    "spawnSync": {
     "params": [
      "string",
      "string[]",
      "object"
     ]
    }
   }
  },
  "cluster": {
   "members": {
    "SCHED_NONE": {
     "value": "number"
    },
    "SCHED_RR": {
     "value": "number"
    },
    "Worker": {
     "class": true,
     "params": []
    },
    "fork": {
     "params": [
      "object"
     ]
    },
    "isMaster": {
     "value": "boolean"
    },
    "isPrimary": {
     "value": "boolean"
    },
    "isWorker": {
     "value": "boolean"
    },
    "on": {
     "params": [
      "string",
      "function"
     ]
    },
    "once": {
     "params": [
      "string",
      "function"
     ]
    },
    "schedulingPolicy": {
     "value": "number"
    },
    "settings": {
     "value": "object"
    },
    "setupMaster": {
     "params": [
      "object"
     ]
    },
    "setupPrimary": {
     "params": [
      "object"
     ]
    },
    "worker": {
     "value": "Worker"
    },
    "workers": {
     "value": "object"
    }
   }
  },
  "constants": {
   "members": {}
  },
  "crypto": {
   "members": {
    "Cipher": {
     "class": true,
     "params": []
    },
    "Decipher": {
     "class": true,
     "params": []
    },
    "Hash": {
     "class": true,
     "params": []
    },
    "Hmac": {
     "class": true,
     "params": []
    },
    "KeyObject": {
     "class": true,
     "params": []
    },
    "Sign": {
     "class": true,
     "params": []
    },
    "Verify": {
     "class": true,
     "params": []
    },
    "X509Certificate": {
     "class": true,
     "params": [
      "BinaryLike"
     ]
    },
    "constants": {
     "value": "object"
    },
    "createCipheriv": {
     "params": [
      "string",
      "CipherKey",
      "BinaryLike | null"
     ]
    },
    "createDecipheriv": {
     "params": [
      "string",
      "CipherKey",
      "BinaryLike | null"
     ]
    },
    "createDiffieHellman": {
     "params": [
      "number"
     ]
    },
    "createECDH": {
     "params": [
      "string"
     ]
    },
    "createHash": {
     "params": [
      "string",
      "HashOptions"
     ]
    },
    "createHmac": {
     "params": [
      "string",
      "BinaryLike | KeyObject"
     ]
    },
    "createPrivateKey": {
     "params": [
      "PrivateKeyInput | string | Buffer"
     ]
    },
    "createPublicKey": {
     "params": [
      "PublicKeyInput | string | Buffer"
     ]
    },
    "createSecretKey": {
     "params": [
      "NodeJS.ArrayBufferView"
     ]
    },
    "createSign": {
     "params": [
      "string"
     ]
    },
    "createVerify": {
     "params": [
      "string"
     ]
    },
    "generateKey": {
     "params": [
      "string",
      "object",
      "function"
     ]
    },
    "generateKeyPair": {
     "params": [
      "string",
      "object",
      "function"
     ]
    },
    "generateKeyPairSync": {
     "params": [
      "string",
      "object"
     ]
    },
    "generateKeySync": {
     "params": [
      "string",
      "object"
     ]
    },
    "getCiphers": {
     "params": []
    },
    "getCurves": {
     "params": []
    },
    "getHashes": {
     "params": []
    },
    "getRandomValues": {
     "params": [
      "TypedArray"
     ]
    },
    "hash": {
     "params": [
      "string",
      "BinaryLike",
      "string"
     ]
    },
    "pbkdf2": {
     "params": [
      "BinaryLike",
      "BinaryLike",
      "number",
      "number",
      "string",
      "function"
     ]
    },
    "pbkdf2Sync": {
     "params": [
      "BinaryLike",
      "BinaryLike",
      "number",
      "number",
      "string"
     ]
    },
    "privateDecrypt": {
     "params": [
      "KeyLike",
      "NodeJS.ArrayBufferView"
     ]
    },
    "privateEncrypt": {
     "params": [
      "KeyLike",
      "NodeJS.ArrayBufferView"
     ]
    },
    "publicDecrypt": {
     "params": [
      "KeyLike",
      "NodeJS.ArrayBufferView"
     ]
    },
    "publicEncrypt": {
     "params": [
      "KeyLike",
      "NodeJS.ArrayBufferView"
     ]
    },
    "randomBytes": {
     "params": [
      "number",
      "function"
     ]
    },
    "randomFill": {
     "params": [
      "TypedArray",
      "function"
     ]
    },
    "randomFillSync": {
     "params": [
      "TypedArray"
     ]
    },
    "randomInt": {
     "params": [
      "number",
      "number"
     ]
    },
    "randomUUID": {
     "params": [
      "object"
     ]
    },
    "scrypt": {
     "params": [
      "BinaryLike",
      "BinaryLike",
      "number",
      "function"
     ]
    },
    "scryptSync": {
     "params": [
      "BinaryLike",
      "BinaryLike",
      "number"
     ]
    },
    "sign": {
     "params": [
      "string | null",
      "BinaryLike",
      "KeyLike"
     ]
    },
    "subtle": {
     "value": "object"
    },
    "timingSafeEqual": {
     "params": [
      "NodeJS.ArrayBufferView",
      "NodeJS.ArrayBufferView"
     ]
    },
    "verify": {
     "params": [
      "string | null",
      "BinaryLike",
      "KeyLike",
      "BinaryLike"
     ]
    },
    "webcrypto": {
     "value": "object"
    }
   }
  },
  "dgram": {
   "members": {
    "Socket": {
     "class": true,
     "params": []
    },
    "createSocket": {
     "params": [
      "string | SocketOptions",
      "function"
     ]
    }
   }
  },
  "diagnostics_channel": {
   "members": {
    "Channel": {
     "class": true,
     "params": []
    },
    "channel": {
     "params": [
      "string | symbol"
     ]
    },
    "hasSubscribers": {
     "params": [
      "string | symbol"
     ]
    },
    "subscribe": {
     "params": [
      "string | symbol",
      "function"
     ]
    },
    "tracingChannel": {
     "params": [
      "string | object"
     ]
    },
    "unsubscribe": {
     "params": [
      "string | symbol",
      "function"
     ]
    }
   }
  },
  "dns": {
   "members": {
    "Resolver": {
     "class": true,
     "params": []
    },
    "getDefaultResultOrder": {
     "params": []
    },
    "getServers": {
     "params": []
    },
    "lookup": {
     "params": [
      "string",
      "...any"
     ]
    },
    "lookupService": {
     "params": [
      "string",
      "number",
      "function"
     ]
    },
    "promises": {
     "value": "object"
    },
    "resolve": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolve4": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolve6": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolveAny": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolveCaa": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolveCname": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolveMx": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolveNaptr": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolveNs": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolvePtr": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolveSoa": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolveSrv": {
     "params": [
      "string",
      "...any"
     ]
    },
    "resolveTxt": {
     "params": [
      "string",
      "...any"
     ]
    },
    "reverse": {
     "params": [
      "string",
      "...any"
     ]
    },
    "setDefaultResultOrder": {
     "params": [
      "string"
     ]
    },
    "setServers": {
     "params": [
      "string[]"
     ]
    }
   }
  },
  "domain": {
   "members": {
    "Domain": {
     "class": true,
     "params": []
    },
    "create": {
     "params": []
    }
   }
  },
  "events": {
   "members": {
    "EventEmitter": {
     "class": true,
     "params": [
      "object"
     ]
    },
    "addAbortListener": {
     "params": [
      "AbortSignal",
      "function"
     ]
    },
    "captureRejectionSymbol": {
     "value": "symbol"
    },
    "captureRejections": {
     "value": "boolean"
    },
    "defaultMaxListeners": {
     "value": "number"
    },
    "errorMonitor": {
     "value": "symbol"
    },
    "getEventListeners": {
     "params": [
      "EventEmitter",
      "string | symbol"
     ]
    },
    "listenerCount": {
     "params": [
      "EventEmitter",
      "string | symbol"
     ]
    },
    "on": {
     "params": [
      "EventEmitter",
      "string"
     ]
    },
    "once": {
     "params": [
      "EventEmitter",
      "string | symbol"
     ]
    },
    "setMaxListeners": {
     "params": [
      "number",
      "...EventEmitter"
     ]
    }
   }
  },
  "fs": {
   "members": {
    "Dir": {
     "class": true,
     "params": []
    },
    "Dirent": {
     "class": true,
     "params": []
    },
    "F_OK": {
     "value": "number"
    },
    "R_OK": {
     "value": "number"
    },
    "ReadStream": {
     "class": true,
     "params": []
    },
    "Stats": {
     "class": true,
     "params": []
    },
    "W_OK": {
     "value": "number"
    },
    "WriteStream": {
     "class": true,
     "params": []
    },
    "X_OK": {
     "value": "number"
    },
    "access": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "accessSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "appendFile": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "appendFileSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "chmod": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "chmodSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "chown": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "chownSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "close": {
     "params": [
      "number",
      "...any"
     ]
    },
    "closeSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "constants": {
     "value": "object"
    },
    "copyFile": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "copyFileSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "cp": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "cpSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "createReadStream": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "createWriteStream": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "exists": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "existsSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "fchmod": {
     "params": [
      "number",
      "...any"
     ]
    },
    "fchmodSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "fchown": {
     "params": [
      "number",
      "...any"
     ]
    },
    "fchownSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "fdatasync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "fdatasyncSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "fstat": {
     "params": [
      "number",
      "...any"
     ]
    },
    "fstatSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "fsync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "fsyncSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "ftruncate": {
     "params": [
      "number",
      "...any"
     ]
    },
    "ftruncateSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "futimes": {
     "params": [
      "number",
      "...any"
     ]
    },
    "futimesSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "lchmod": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "lchmodSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "lchown": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "lchownSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "link": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "linkSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "lstat": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "lstatSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "lutimes": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "lutimesSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "mkdir": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "mkdirSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "mkdtemp": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "mkdtempSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "open": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "openSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "opendir": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "opendirSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "promises": {
     "value": "object"
    },
    "read": {
     "params": [
      "number",
      "...any"
     ]
    },
    "readFile": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "readFileSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "readSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "readdir": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "readdirSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "readlink": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "readlinkSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "readv": {
     "params": [
      "number",
      "...any"
     ]
    },
    "readvSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "realpath": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "realpathSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "rename": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "renameSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "rm": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "rmSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "rmdir": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "rmdirSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "stat": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "statSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "statfs": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "statfsSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "symlink": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "symlinkSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "truncate": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "truncateSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "unlink": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "unlinkSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "unwatchFile": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "utimes": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "utimesSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "watch": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "watchFile": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "write": {
     "params": [
      "number",
      "...any"
     ]
    },
    "writeFile": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "writeFileSync": {
     "params": [
      "PathLike | number",
      "...any"
     ]
    },
    "writeSync": {
     "params": [
      "number",
      "...any"
     ]
    },
    "writev": {
     "params": [
      "number",
      "...any"
     ]
    },
    "writevSync": {
     "params": [
      "number",
      "...any"
     ]
    }
   }
  },
  "http": {
   "members": {
    "Agent": {
     "class": true,
     "params": [
      "AgentOptions"
     ]
    },
    "ClientRequest": {
     "class": true,
     "params": []
    },
    "IncomingMessage": {
     "class": true,
     "params": []
    },
    "METHODS": {
     "value": "string[]"
    },
    "OutgoingMessage": {
     "class": true,
     "params": []
    },
    "STATUS_CODES": {
     "value": "object"
    },
    "Server": {
     "class": true,
     "params": []
    },
    "ServerResponse": {
     "class": true,
     "params": []
    },
    "createServer": {
     "params": [
      "function"
     ]
    },
    "get": {
     "params": [
      "string | RequestOptions | URL",
      "function"
     ]
    },
    "globalAgent": {
     "value": "Agent"
    },
    "maxHeaderSize": {
     "value": "number"
    },
    "request": {
     "params": [
      "string | RequestOptions | URL",
      "function"
     ]
    },
    "setMaxIdleHTTPParsers": {
     "params": [
      "number"
     ]
    },
    "validateHeaderName": {
     "params": [
      "string"
     ]
    },
    "validateHeaderValue": {
     "params": [
      "string",
      "unknown"
     ]
    }
   }
  },
  "http2": {
   "members": {
    "connect": {
     "params": [
      "string | URL",
      "...any"
     ]
    },
    "constants": {
     "value": "object"
    },
    "createSecureServer": {
     "params": [
      "object",
      "function"
     ]
    },
    "createServer": {
     "params": [
      "object",
      "function"
     ]
    },
    "getDefaultSettings": {
     "params": []
    },
    "getPackedSettings": {
     "params": [
      "object"
     ]
    },
    "getUnpackedSettings": {
     "params": [
      "Uint8Array"
     ]
    },
    "sensitiveHeaders": {
     "value": "symbol"
    }
   }
  },
  "https": {
   "members": {
    "Agent": {
     "class": true,
     "params": [
      "AgentOptions"
     ]
    },
    "Server": {
     "class": true,
     "params": []
    },
    "createServer": {
     "params": [
      "ServerOptions | function",
      "function"
     ]
    },
    "get": {
     "params": [
      "string | RequestOptions | URL",
      "function"
     ]
    },
    "globalAgent": {
     "value": "Agent"
    },
    "request": {
     "params": [
      "string | RequestOptions | URL",
      "function"
     ]
    }
   }
  },
  "inspector": {
   "members": {
    "Session": {
     "class": true,
     "params": []
    },
    "close": {
     "params": []
    },
    "console": {
     "value": "object"
    },
    "open": {
     "params": [
      "number",
      "string",
      "boolean"
     ]
    },
    "url": {
     "params": []
    },
    "waitForDebugger": {
     "params": []
    }
   }
  },
  "module": {
   "members": {
    "Module": {
     "class": true,
     "params": []
    },
    "SourceMap": {
     "class": true,
     "params": [
      "object"
     ]
    },
    "builtinModules": {
     "value": "string[]"
    },
    "createRequire": {
     "params": [
      "string | URL"
     ]
    },
    "findSourceMap": {
     "params": [
      "string"
     ]
    },
    "isBuiltin": {
     "params": [
      "string"
     ]
    },
    "register": {
     "params": [
      "string",
      "...any"
     ]
    },
    "syncBuiltinESMExports": {
     "params": []
    }
   }
  },
  "net": {
   "members": {
    "BlockList": {
     "class": true,
     "params": []
    },
    "Server": {
     "class": true,
     "params": []
    },
    "Socket": {
     "class": true,
     "params": [
      "SocketConstructorOpts"
     ]
    },
    "SocketAddress": {
     "class": true,
     "params": [
      "object"
     ]
    },
    "connect": {
     "params": [
      "number | object",
      "...any"
     ]
    },
    "createConnection": {
     "params": [
      "number | object",
      "...any"
     ]
    },
    "createServer": {
     "params": [
      "function"
     ]
    },
    "getDefaultAutoSelectFamily": {
     "params": []
    },
    "isIP": {
     "params": [
      "string"
     ]
    },
    "isIPv4": {
     "params": [
      "string"
     ]
    },
    "isIPv6": {
     "params": [
      "string"
     ]
    },
    "setDefaultAutoSelectFamily": {
     "params": [
      "boolean"
     ]
    }
   }
  },
  "os": {
   "members": {
    "EOL": {
     "value": "string"
    },
    "arch": {
     "params": []
    },
    "availableParallelism": {
     "params": []
    },
    "constants": {
     "value": "object"
    },
    "cpus": {
     "params": []
    },
    "devNull": {
     "value": "string"
    },
    "endianness": {
     "params": []
    },
    "freemem": {
     "params": []
    },
    "getPriority": {
     "params": [
      "number"
     ]
    },
    "homedir": {
     "params": []
    },
    "hostname": {
     "params": []
    },
    "loadavg": {
     "params": []
    },
    "machine": {
     "params": []
    },
    "networkInterfaces": {
     "params": []
    },
    "platform": {
     "params": []
    },
    "release": {
     "params": []
    },
    "setPriority": {
     "params": [
      "number",
      "number"
     ]
    },
    "tmpdir": {
     "params": []
    },
    "totalmem": {
     "params": []
    },
    "type": {
     "params": []
    },
    "uptime": {
     "params": []
    },
    "userInfo": {
     "params": [
      "object"
     ]
    },
    "version": {
     "params": []
    }
   }
  },
  "path": {
   "members": {
    "basename": {
     "params": [
      "string",
      "string"
     ]
    },
    "delimiter": {
     "value": "string"
    },
    "dirname": {
     "params": [
      "string"
     ]
    },
    "extname": {
     "params": [
      "string"
     ]
    },
    "format": {
     "params": [
      "FormatInputPathObject"
     ]
    },
    "isAbsolute": {
     "params": [
      "string"
     ]
    },
    "join": {
     "params": [
      "...string"
     ]
    },
    "matchesGlob": {
     "params": [
      "string",
      "string"
     ]
    },
    "normalize": {
     "params": [
      "string"
     ]
    },
    "parse": {
     "params": [
      "string"
     ]
    },
    "posix": {
     "value": "object"
    },
    "relative": {
     "params": [
      "string",
      "string"
     ]
    },
    "resolve": {
     "params": [
      "...string"
     ]
    },
    "sep": {
     "value": "string"
    },
    "toNamespacedPath": {
     "params": [
      "string"
     ]
    },
    "win32": {
     "value": "object"
    }
   }
  },
  "perf_hooks": {
   "members": {
    "PerformanceObserver": {
     "class": true,
     "params": [
      "function"
     ]
    },
    "constants": {
     "value": "object"
    },
    "createHistogram": {
     "params": [
      "object"
     ]
    },
    "monitorEventLoopDelay": {
     "params": [
      "object"
     ]
    },
    "performance": {
     "value": "Performance"
    }
   }
  },
  "process": {
   "members": {
    "arch": {
     "value": "any"
    },
    "argv": {
     "value": "any"
    },
    "chdir": {
     "value": "any"
    },
    "config": {
     "value": "any"
    },
    "cwd": {
     "value": "any"
    },
    "emitWarning": {
     "value": "any"
    },
    "env": {
     "value": "any"
    },
    "execPath": {
     "value": "any"
    },
    "exit": {
     "value": "any"
    },
    "exitCode": {
     "value": "any"
    },
    "hrtime": {
     "value": "any"
    },
    "kill": {
     "value": "any"
    },
    "memoryUsage": {
     "value": "any"
    },
    "nextTick": {
     "value": "any"
    },
    "on": {
     "value": "any"
    },
    "once": {
     "value": "any"
    },
    "pid": {
     "value": "any"
    },
    "platform": {
     "value": "any"
    },
    "release": {
     "value": "any"
    },
    "stderr": {
     "value": "any"
    },
    "stdin": {
     "value": "any"
    },
    "stdout": {
     "value": "any"
    },
    "title": {
     "value": "any"
    },
    "uptime": {
     "value": "any"
    },
    "version": {
     "value": "any"
    },
    "versions": {
     "value": "any"
    }
   }
  },
  "punycode": {
   "members": {
    "decode": {
     "params": [
      "string"
     ]
    },
    "encode": {
     "params": [
      "string"
     ]
    },
    "toASCII": {
     "params": [
      "string"
     ]
    },
    "toUnicode": {
     "params": [
      "string"
     ]
    },
    "ucs2": {
     "value": "object"
    },
    "version": {
     "value": "string"
    }
   }
  },
  "querystring": {
   "members": {
    "decode": {
     "params": [
      "string"
     ]
    },
    "encode": {
     "params": [
      "object"
     ]
    },
    "escape": {
     "params": [
      "string"
     ]
    },
    "parse": {
     "params": [
      "string",
      "string",
      "string"
     ]
    },
    "stringify": {
     "params": [
      "object",
      "string",
      "string"
     ]
    },
    "unescape": {
     "params": [
      "string"
     ]
    }
   }
  },
  "readline": {
   "members": {
    "Interface": {
     "class": true,
     "params": []
    },
    "clearLine": {
     "params": [
      "NodeJS.WritableStream",
      "number"
     ]
    },
    "clearScreenDown": {
     "params": [
      "NodeJS.WritableStream"
     ]
    },
    "createInterface": {
     "params": [
      "ReadLineOptions | NodeJS.ReadableStream"
     ]
    },
    "cursorTo": {
     "params": [
      "NodeJS.WritableStream",
      "number",
      "number"
     ]
    },
    "emitKeypressEvents": {
     "params": [
      "NodeJS.ReadableStream"
     ]
    },
    "moveCursor": {
     "params": [
      "NodeJS.WritableStream",
      "number",
      "number"
     ]
    },
    "promises": {
     "value": "object"
    }
   }
  },
  "repl": {
   "members": {
    "REPLServer": {
     "class": true,
     "params": []
    },
    "builtinModules": {
     "value": "string[]"
    },
    "start": {
     "params": [
      "string | ReplOptions"
     ]
    }
   }
  },
  "stream": {
   "members": {
    "Duplex": {
     "class": true,
     "params": [
      "DuplexOptions"
     ]
    },
    "PassThrough": {
     "class": true,
     "params": [
      "TransformOptions"
     ]
    },
    "Readable": {
     "class": true,
     "params": [
      "ReadableOptions"
     ]
    },
    "Stream": {
     "class": true,
     "params": []
    },
    "Transform": {
     "class": true,
     "params": [
      "TransformOptions"
     ]
    },
    "Writable": {
     "class": true,
     "params": [
      "WritableOptions"
     ]
    },
    "addAbortSignal": {
     "params": [
      "AbortSignal",
      "Stream"
     ]
    },
    "compose": {
     "params": [
      "...any"
     ]
    },
    "finished": {
     "params": [
      "Stream",
      "function"
     ]
    },
    "getDefaultHighWaterMark": {
     "params": [
      "boolean"
     ]
    },
    "isErrored": {
     "params": [
      "Stream"
     ]
    },
    "isReadable": {
     "params": [
      "Stream"
     ]
    },
    "pipeline": {
     "params": [
      "...any"
     ]
    },
    "promises": {
     "value": "object"
    },
    "setDefaultHighWaterMark": {
     "params": [
      "boolean",
      "number"
     ]
    }
   }
  },
  "string_decoder": {
   "members": {
    "StringDecoder": {
     "class": true,
     "params": [
      "string"
     ]
    }
   }
  },
  "test": {
   "members": {
    "after": {
     "params": [
      "function"
     ]
    },
    "afterEach": {
     "params": [
      "function"
     ]
    },
    "before": {
     "params": [
      "function"
     ]
    },
    "beforeEach": {
     "params": [
      "function"
     ]
    },
    "describe": {
     "params": [
      "string",
      "function"
     ]
    },
    "it": {
     "params": [
      "string",
      "function"
     ]
    },
    "mock": {
     "value": "object"
    },
    "run": {
     "params": [
      "object"
     ]
    },
    "test": {
     "params": [
      "string",
      "function"
     ]
    }
   }
  },
  "timers": {
   "members": {
    "clearImmediate": {
     "params": [
      "any"
     ]
    },
    "clearInterval": {
     "params": [
      "any"
     ]
    },
    "clearTimeout": {
     "params": [
      "any"
     ]
    },
    "promises": {
     "value": "object"
    },
    "setImmediate": {
     "params": [
      "function",
      "...any"
     ]
    },
    "setInterval": {
     "params": [
      "function",
      "number",
      "...any"
     ]
    },
    "setTimeout": {
     "params": [
      "function",
      "number",
      "...any"
     ]
    }
   }
  },
  "tls": {
   "members": {
    "DEFAULT_ECDH_CURVE": {
     "value": "string"
    },
    "DEFAULT_MAX_VERSION": {
     "value": "string"
    },
    "DEFAULT_MIN_VERSION": {
     "value": "string"
    },
    "Server": {
     "class": true,
     "params": []
    },
    "TLSSocket": {
     "class": true,
     "params": [
      "Socket"
     ]
    },
    "checkServerIdentity": {
     "params": [
      "string",
      "PeerCertificate"
     ]
    },
    "connect": {
     "params": [
      "number | ConnectionOptions",
      "...any"
     ]
    },
    "createSecureContext": {
     "params": [
      "SecureContextOptions"
     ]
    },
    "createServer": {
     "params": [
      "TlsOptions",
      "function"
     ]
    },
    "getCiphers": {
     "params": []
    },
    "rootCertificates": {
     "value": "string[]"
    }
   }
  },
  "trace_events": {
   "members": {
    "createTracing": {
     "params": [
      "object"
     ]
    },
    "getEnabledCategories": {
     "params": []
    }
   }
  },
  "tty": {
   "members": {
    "ReadStream": {
     "class": true,
     "params": [
      "number"
     ]
    },
    "WriteStream": {
     "class": true,
     "params": [
      "number"
     ]
    },
    "isatty": {
     "params": [
      "number"
     ]
    }
   }
  },
  "url": {
   "members": {
    "URL": {
     "class": true,
     "params": [
      "string",
      "string | URL"
     ]
    },
    "URLSearchParams": {
     "class": true,
     "params": [
      "string | object"
     ]
    },
    "Url": {
     "class": true,
     "params": []
    },
    "domainToASCII": {
     "params": [
      "string"
     ]
    },
    "domainToUnicode": {
     "params": [
      "string"
     ]
    },
    "fileURLToPath": {
     "params": [
      "string | URL"
     ]
    },
    "format": {
     "params": [
      "URL | UrlObject | string"
     ]
    },
    "parse": {
     "params": [
      "string",
      "boolean",
      "boolean"
     ]
    },
    "pathToFileURL": {
     "params": [
      "string"
     ]
    },
    "resolve": {
     "params": [
      "string",
      "string"
     ]
    },
    "urlToHttpOptions": {
     "params": [
      "URL"
     ]
    }
   }
  },
  "util": {
   "members": {
    "MIMEParams": {
     "class": true,
     "params": []
    },
    "MIMEType": {
     "class": true,
     "params": [
      "string"
     ]
    },
    "TextDecoder": {
     "class": true,
     "params": [
      "string"
     ]
    },
    "TextEncoder": {
     "class": true,
     "params": []
    },
    "aborted": {
     "params": [
      "AbortSignal",
      "any"
     ]
    },
    "callbackify": {
     "params": [
      "function"
     ]
    },
    "debug": {
     "params": [
      "string"
     ]
    },
    "debuglog": {
     "params": [
      "string"
     ]
    },
    "deprecate": {
     "params": [
      "function",
      "string",
      "string"
     ]
    },
    "format": {
     "params": [
      "any",
      "...any"
     ]
    },
    "formatWithOptions": {
     "params": [
      "object",
      "...any"
     ]
    },
    "getSystemErrorMap": {
     "params": []
    },
    "getSystemErrorName": {
     "params": [
      "number"
     ]
    },
    "inherits": {
     "params": [
      "function",
      "function"
     ]
    },
    "inspect": {
     "params": [
      "any",
      "object"
     ]
    },
    "isArray": {
     "params": [
      "any"
     ]
    },
    "isBoolean": {
     "params": [
      "any"
     ]
    },
    "isBuffer": {
     "params": [
      "any"
     ]
    },
    "isDate": {
     "params": [
      "any"
     ]
    },
    "isDeepStrictEqual": {
     "params": [
      "any",
      "any"
     ]
    },
    "isError": {
     "params": [
      "any"
     ]
    },
    "isFunction": {
     "params": [
      "any"
     ]
    },
    "isNull": {
     "params": [
      "any"
     ]
    },
    "isNullOrUndefined": {
     "params": [
      "any"
     ]
    },
    "isNumber": {
     "params": [
      "any"
     ]
    },
    "isObject": {
     "params": [
      "any"
     ]
    },
    "isPrimitive": {
     "params": [
      "any"
     ]
    },
    "isRegExp": {
     "params": [
      "any"
     ]
    },
    "isString": {
     "params": [
      "any"
     ]
    },
    "isSymbol": {
     "params": [
      "any"
     ]
    },
    "isUndefined": {
     "params": [
      "any"
     ]
    },
    "log": {
     "params": [
      "string"
     ]
    },
    "parseArgs": {
     "params": [
      "object"
     ]
    },
    "parseEnv": {
     "params": [
      "string"
     ]
    },
    "promisify": {
     "params": [
      "function"
     ]
    },
    "stripVTControlCharacters": {
     "params": [
      "string"
     ]
    },
    "styleText": {
     "params": [
      "string | string[]",
      "string"
     ]
    },
    "toUSVString": {
     "params": [
      "string"
     ]
    },
    "transferableAbortController": {
     "params": []
    },
    "transferableAbortSignal": {
     "params": [
      "AbortSignal"
     ]
    },
    "types": {
     "value": "object"
    }
   }
  },
  "v8": {
   "members": {
    "cachedDataVersionTag": {
     "params": []
    },
    "deserialize": {
     "params": []
    },
    "getHeapCodeStatistics": {
     "params": []
    },
    "getHeapSnapshot": {
     "params": []
    },
    "getHeapSpaceStatistics": {
     "params": []
    },
    "getHeapStatistics": {
     "params": []
    },
    "serialize": {
     "params": []
    },
    "setFlagsFromString": {
     "params": []
    },
    "stopCoverage": {
     "params": []
    },
    "takeCoverage": {
     "params": []
    },
    "writeHeapSnapshot": {
     "params": []
    }
   }
  },
  "vm": {
   "members": {
    "Script": {
     "class": true,
     "params": [
      "string"
     ]
    },
    "compileFunction": {
     "params": [
      "string",
      "string[]"
     ]
    },
    "constants": {
     "value": "object"
    },
    "createContext": {
     "params": [
      "object"
     ]
    },
    "isContext": {
     "params": [
      "object"
     ]
    },
    "measureMemory": {
     "params": [
      "object"
     ]
    },
    "runInContext": {
     "params": [
      "string",
      "Context"
     ]
    },
    "runInNewContext": {
     "params": [
      "string",
      "object"
     ]
    },
    "runInThisContext": {
     "params": [
      "string"
     ]
    }
   }
  },
  "wasi": {
   "members": {
    "WASI": {
     "class": true,
     "params": [
      "object"
     ]
    }
   }
  },
  "worker_threads": {
   "members": {
    "BroadcastChannel": {
     "class": true,
     "params": [
      "string"
     ]
    },
    "MessageChannel": {
     "class": true,
     "params": []
    },
    "MessagePort": {
     "class": true,
     "params": []
    },
    "SHARE_ENV": {
     "value": "symbol"
    },
    "Worker": {
     "class": true,
     "params": [
      "string | URL",
      "WorkerOptions"
     ]
    },
    "getEnvironmentData": {
     "params": [
      "any"
     ]
    },
    "isMainThread": {
     "value": "boolean"
    },
    "markAsUntransferable": {
     "params": [
      "object"
     ]
    },
    "moveMessagePortToContext": {
     "params": [
      "MessagePort",
      "Context"
     ]
    },
    "parentPort": {
     "value": "MessagePort | null"
    },
    "receiveMessageOnPort": {
     "params": [
      "MessagePort"
     ]
    },
    "resourceLimits": {
     "value": "object"
    },
    "setEnvironmentData": {
     "params": [
      "any",
      "any"
     ]
    },
    "threadId": {
     "value": "number"
    },
    "workerData": {
     "value": "any"
    }
   }
  },
  "zlib": {
   "members": {
    "brotliCompress": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "brotliCompressSync": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "brotliDecompress": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "brotliDecompressSync": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "constants": {
     "value": "object"
    },
    "crc32": {
     "params": [
      "string | Buffer",
      "number"
     ]
    },
    "createBrotliCompress": {
     "params": [
      "ZlibOptions"
     ]
    },
    "createBrotliDecompress": {
     "params": [
      "ZlibOptions"
     ]
    },
    "createDeflate": {
     "params": [
      "ZlibOptions"
     ]
    },
    "createDeflateRaw": {
     "params": [
      "ZlibOptions"
     ]
    },
    "createGunzip": {
     "params": [
      "ZlibOptions"
     ]
    },
    "createGzip": {
     "params": [
      "ZlibOptions"
     ]
    },
    "createInflate": {
     "params": [
      "ZlibOptions"
     ]
    },
    "createInflateRaw": {
     "params": [
      "ZlibOptions"
     ]
    },
    "createUnzip": {
     "params": [
      "ZlibOptions"
     ]
    },
    "deflate": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "deflateRaw": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "deflateRawSync": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "deflateSync": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "gunzip": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "gunzipSync": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "gzip": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "gzipSync": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "inflate": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "inflateRaw": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "inflateRawSync": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "inflateSync": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "unzip": {
     "params": [
      "InputType",
      "...any"
     ]
    },
    "unzipSync": {
     "params": [
      "InputType",
      "...any"
     ]
    }
   }
  }
 },
 "primitives": {
  "object": [
   "constructor",
   "hasOwnProperty",
   "isPrototypeOf",
   "propertyIsEnumerable",
   "toLocaleString",
   "toString",
   "valueOf"
  ],
  "string": [
   "length",
   "anchor",
   "at",
   "big",
   "blink",
   "bold",
   "charAt",
   "charCodeAt",
   "codePointAt",
   "concat",
   "endsWith",
   "fixed",
   "fontcolor",
   "fontsize",
   "includes",
   "indexOf",
   "isWellFormed",
   "italics",
   "lastIndexOf",
   "link",
   "localeCompare",
   "match",
   "matchAll",
   "normalize",
   "padEnd",
   "padStart",
   "repeat",
   "replace",
   "replaceAll",
   "search",
   "slice",
   "small",
   "split",
   "startsWith",
   "strike",
   "sub",
   "substr",
   "substring",
   "sup",
   "toLocaleLowerCase",
   "toLocaleUpperCase",
   "toLowerCase",
   "toUpperCase",
   "toWellFormed",
   "trim",
   "trimEnd",
   "trimLeft",
   "trimRight",
   "trimStart"
  ],
  "number": [
   "toExponential",
   "toFixed",
   "toPrecision"
  ],
  "array": [
   "length",
   "at",
   "concat",
   "copyWithin",
   "entries",
   "every",
   "fill",
   "filter",
   "find",
   "findIndex",
   "findLast",
   "findLastIndex",
   "flat",
   "flatMap",
   "forEach",
   "includes",
   "indexOf",
   "join",
   "keys",
   "lastIndexOf",
   "map",
   "pop",
   "push",
   "reduce",
   "reduceRight",
   "reverse",
   "shift",
   "slice",
   "some",
   "sort",
   "splice",
   "toReversed",
   "toSorted",
   "toSpliced",
   "unshift",
   "values",
   "with"
  ]
 }
}
)ambient";

}  // namespace ncc
