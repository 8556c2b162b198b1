public abstract class ConnectionState extends State {
    protected void log() {
        trace("connection");
    }
}
