package wem;

public class WemSetup {
    private int m_iSize;
    private int m_iReady;

    // WARNING: constructor has side effects
    public WemSetup(int n) {
        m_iSize = n;
        System.out.println(new StringBuilder().append("setup ").append(n));
        m_iReady = 1;
    }

    public int size() {
        return m_iSize;
    }
}
