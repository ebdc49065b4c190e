/** Wire types mirroring the socialbot service JSON. */

export interface RccMember {
  atom: string;
  value: boolean;
  distance: number | null;
}

export interface RccResult {
  topic: string;
  radius: number | null;
  members: RccMember[];
}

export interface PathStep {
  rule: number;
  from: string;
  to: string;
  sign: "positive" | "negative";
}

export interface BotTurn {
  reply: string;
  topic: string;
  chosen: string | null;
  rcc: RccResult | null;
  path: PathStep[];
}

export type MessageRole = "user" | "bot" | "system";

export interface ChatMessage {
  role: MessageRole;
  text: string;
  timestamp: number;
  /** The turn payload, kept on bot messages so paths stay inspectable. */
  turn?: BotTurn;
}
