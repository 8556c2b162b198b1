public abstract class Abstract10 extends State {
}
