export type MoveRule = 'disjunctive' | 'conjunctive' | 'selective'
export type EndingRule = 'long' | 'short'
export type PlayRule = 'normal' | 'misere'

export interface VariantInfo {
  name: string
  move_rule: MoveRule
  ending: EndingRule
  play: PlayRule
}

export interface MoveChoice {
  component_index: number
  vertex: number
}

export interface OutcomeDetail {
  rho?: number[]
  rho_xor?: number
  f?: (number | string)[]
  remoteness?: number
  suspense?: number
  sigma?: number[]
  source?: string
}

export interface OutcomeResponse {
  outcome: 'P' | 'N'
  detail: OutcomeDetail
}

export interface BestMoveResponse {
  move: MoveChoice[] | null
  reason?: string
}

export interface HistoryEntry {
  mover: 'first' | 'second'
  move: MoveChoice[]
}

export interface GameSession {
  id: string
  variant: string
  position: number[]
  status: 'ongoing' | 'finished'
  winner: 'first' | 'second' | null
  to_move: 'first' | 'second'
  history: HistoryEntry[]
  engine_reply?: MoveChoice[]
}
