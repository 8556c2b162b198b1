public class Closed extends State {
    public void open() {
        new Listening();
        send("SYN");
    }
}
