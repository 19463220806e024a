package te;

public class TeStatus {
    public enum State {
        OPEN(1), CLOSED(2), LOST(9);

        State(int val) {
            m_Value = val;
        }

        public int asNum() {
            return m_Value;
        }

        public static State forNum(int val) {
            switch (val) {
                case 1: return OPEN;
                case 2: return CLOSED;
                case 9: return LOST;
                default:
                    throw new RuntimeException("Invalid enum value");
            }
        }

        private int m_Value;
    }

    private State m_eState;

    public TeStatus() {
        m_eState = State.OPEN;
    }

    public State state() {
        return m_eState;
    }

    public void set(int raw) {
        m_eState = State.forNum(raw);
    }
}
